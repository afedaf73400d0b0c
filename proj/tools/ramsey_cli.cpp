#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/additive.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/equation.hpp"
#include "ramsey/json_report.hpp"
#include "ramsey/real_intervals.hpp"
#include "ramsey/verify.hpp"

namespace {

using nlohmann::json;

int resolve_jobs(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("RAMSEY_MULT_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--range wants the form LO..HI, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("--range wants integers, got '" + text + "'");
    }
}

std::string cells_string(const ramsey::DiscreteColouring& c) {
    std::string out;
    out.reserve(static_cast<std::size_t>(c.size()));
    for (std::int64_t x = c.lo(); x <= c.hi(); ++x)
        out.push_back(static_cast<char>('0' + c.at(x)));
    return out;
}

struct Emitter {
    std::string subcommand;
    std::vector<std::string> argv;
    std::string json_path;
    bool seeded = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const json& result) const {
        if (json_path.empty()) return;
        double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        json doc;
        doc["manifest"] =
            ramsey::make_manifest(subcommand, argv, seeded, seed, jobs, wall_ms, result);
        doc["result"] = result;
        write_file(json_path, ramsey::canonical_dump(doc));
    }
};

int run_count(const std::string& eq_text, const std::string& range_text,
              const std::string& colouring_file, bool non_degenerate, Emitter& em) {
    ramsey::EquationSpec eq = ramsey::EquationSpec::parse(eq_text);
    auto [lo, hi] = parse_range(range_text);
    std::optional<ramsey::DiscreteColouring> col;
    if (!colouring_file.empty()) {
        col = ramsey::parse_colouring(read_file(colouring_file));
        if (col->lo() > lo || col->hi() < hi)
            throw std::invalid_argument("colouring domain does not cover the counting range");
    }
    ramsey::CountQuery q{eq, lo, hi, col ? &*col : nullptr, non_degenerate, em.jobs};
    ramsey::CountReport rep = ramsey::count_solutions(q);

    std::cout << "equation " << eq.to_string() << " on [" << lo << ", " << hi << "]\n";
    std::cout << "total " << rep.total << ", non-degenerate " << rep.non_degenerate << "\n";

    json result{{"eq", eq.to_string()},
                {"lo", lo},
                {"hi", hi},
                {"total", rep.total},
                {"non_degenerate", rep.non_degenerate}};
    if (col) {
        json per = json::object();
        for (int colour = 1; colour <= col->r(); ++colour) {  // zeros are worth stating
            ramsey::ColourCount cc;
            auto it = rep.per_colour.find(colour);
            if (it != rep.per_colour.end()) cc = it->second;
            std::cout << "  colour " << colour << ": total " << cc.total << ", non-degenerate "
                      << cc.non_degenerate << "\n";
            per[std::to_string(colour)] = {{"total", cc.total},
                                           {"non_degenerate", cc.non_degenerate}};
        }
        result["per_colour"] = per;
    }
    em.emit(result);
    return 0;
}

int run_construct(const std::string& name, const std::string& lift_file, std::int64_t n,
                  std::int64_t m, const std::string& out_file, Emitter& em) {
    json result;
    if (!name.empty()) {
        ramsey::ResolvedPlan plan = ramsey::resolve_named(name, n);
        result = {{"name", name}, {"n", n}, {"r", plan.r}, {"bounds", plan.bounds},
                  {"colours", plan.colours}};
        std::cout << "construction " << name << " on [2, " << n << "], " << plan.r
                  << " colours\nboundaries:";
        for (std::int64_t b : plan.bounds) std::cout << " " << b;
        std::cout << "\n";
        if (!out_file.empty()) {
            std::ofstream out(out_file, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
            out << 2 << " " << n << " " << plan.r << "\n";
            for (std::int64_t x = 2; x <= n; ++x)
                out << static_cast<char>('0' + plan.colour_of(x));
            out << "\n";
            if (!out) throw std::runtime_error("write failed for '" + out_file + "'");
            result["out"] = out_file;
        }
    } else {
        ramsey::RationalIntervalColouring xi =
            ramsey::interval_colouring_from_json(json::parse(read_file(lift_file)));
        std::int64_t use_m =
            m > 0 ? m
                  : ramsey::default_lift_m(n, xi.pieces.back().hi, xi.pieces.back().hi_closed);
        ramsey::DiscreteColouring c = ramsey::lift({xi, use_m, n});
        result = {{"template", lift_file}, {"m", use_m}, {"n", n}, {"r", c.r()}};
        std::cout << "lifted template '" << lift_file << "' with M = " << use_m << " onto [2, "
                  << n << "], " << c.r() << " colours\n";
        if (!out_file.empty()) {
            write_file(out_file, ramsey::serialize_colouring(c));
            result["out"] = out_file;
        }
    }
    em.emit(result);
    return 0;
}

int run_search(const std::string& system, const std::string& eq_text, int colours,
               std::int64_t limit, bool want_extremals, const std::string& cnf_file,
               std::int64_t n_override, Emitter& em) {
    std::optional<ramsey::EquationSpec> eq;
    if (!eq_text.empty()) eq = ramsey::EquationSpec::parse(eq_text);
    ramsey::AdditiveSystem sys = ramsey::make_additive_system(system, eq);

    json result{{"system", ramsey::additive_kind_name(sys.kind)}, {"r", colours}};
    if (eq) result["eq"] = eq->to_string();

    if (n_override > 0) {
        std::vector<ramsey::DiscreteColouring> ext =
            ramsey::enumerate_extremals(sys, colours, n_override, em.jobs);
        std::uint64_t raw = 0;
        for (const auto& c : ext) {
            int used = 0;
            for (std::int64_t x = c.lo(); x <= c.hi(); ++x) used = std::max(used, c.at(x));
            raw += ramsey::colour_relabellings(colours, used);
        }
        result["n"] = n_override;
        result["extremal_count"] = ext.size();
        result["raw_extremal_count"] = raw;
        std::cout << "valid colourings of [1, " << n_override << "]: " << ext.size()
                  << " canonical (" << raw << " with relabellings)\n";
        if (want_extremals) {
            json arr = json::array();
            for (const auto& c : ext) arr.push_back(cells_string(c));
            result["extremals"] = arr;
        }
        if (!cnf_file.empty()) {
            std::uint64_t clauses = ramsey::export_cnf(sys, colours, n_override, cnf_file);
            result["cnf"] = {{"path", cnf_file}, {"clauses", clauses}};
            std::cout << "wrote CNF (" << clauses << " clauses) to " << cnf_file << "\n";
        }
        em.emit(result);
        return 0;
    }

    ramsey::SearchReport rep =
        ramsey::find_threshold(sys, colours, limit, want_extremals, em.jobs);
    result["threshold"] = rep.threshold;
    result["extremal_count"] = rep.extremal_count;
    result["raw_extremal_count"] = rep.raw_extremal_count;
    result["nodes"] = rep.nodes_visited;
    std::cout << "threshold = " << rep.threshold << " (" << rep.nodes_visited << " nodes)\n";
    std::cout << "extremal colourings of [1, " << rep.threshold - 1
              << "]: " << rep.extremal_count << " canonical, " << rep.raw_extremal_count
              << " with relabellings\n";
    if (want_extremals) {
        json arr = json::array();
        for (const auto& c : rep.extremals) arr.push_back(cells_string(c));
        result["extremals"] = arr;
    }
    if (!cnf_file.empty()) {
        std::uint64_t clauses = ramsey::export_cnf(sys, colours, rep.threshold, cnf_file);
        result["cnf"] = {{"path", cnf_file}, {"clauses", clauses}};
        std::cout << "wrote CNF at the threshold (" << clauses << " clauses) to " << cnf_file
                  << "\n";
    }
    em.emit(result);
    return 0;
}

int run_interval_check(const std::string& eq_text, const std::string& template_file,
                       const std::string& certify_file, Emitter& em) {
    ramsey::EquationSpec eq = ramsey::EquationSpec::parse(eq_text);
    ramsey::RationalIntervalColouring col =
        ramsey::interval_colouring_from_json(json::parse(read_file(template_file)));
    std::optional<ramsey::RealWitness> wit = ramsey::find_additive_witness(col, eq);

    json result{{"eq", eq.to_string()},
                {"r", col.r},
                {"T", ramsey::rational_to_string(col.pieces.back().hi)},
                {"free", !wit.has_value()}};
    if (wit) {
        json xs = json::array();
        for (const auto& x : wit->xs) xs.push_back(ramsey::rational_to_string(x));
        result["witness"] = {{"xs", xs},
                             {"y", ramsey::rational_to_string(wit->y)},
                             {"colour", wit->colour}};
        std::cout << "monochromatic solution found in colour " << wit->colour << ": ";
        for (const auto& x : wit->xs) std::cout << ramsey::rational_to_string(x) << " ";
        std::cout << "-> " << ramsey::rational_to_string(wit->y) << "\n";
    } else {
        std::cout << "solution-free for " << eq.to_string() << " up to T = "
                  << ramsey::rational_to_string(col.pieces.back().hi) << "\n";
    }
    if (!certify_file.empty()) {
        ramsey::IntervalCertificate cert = ramsey::certify_interval_lower_bound(col, eq);
        write_file(certify_file, ramsey::canonical_dump(ramsey::certificate_to_json(cert)));
        result["certificate"] = certify_file;
        std::cout << "certificate written to " << certify_file << "\n";
    }
    em.emit(result);
    return wit ? 1 : 0;
}

int run_lemma31(std::int64_t a, std::int64_t l, std::int64_t k, Emitter& em) {
    ramsey::Lemma31Report rep = ramsey::verify_lemma31(a, l, k);
    std::cout << "T(a=" << a << ", l=" << l << ", k=" << k << "): "
              << (rep.passed ? "holds" : "FAILS") << " over " << rep.colourings_checked
              << " colourings";
    if (rep.side_conditions)
        std::cout << " (non-degenerate form " << (rep.holds_nondegenerate ? "holds" : "FAILS")
                  << ")";
    std::cout << "\n";
    em.emit(json{{"a", a},
                 {"l", l},
                 {"k", k},
                 {"premise_possible", rep.premise_possible},
                 {"side_conditions", rep.side_conditions},
                 {"colourings_checked", rep.colourings_checked},
                 {"holds", rep.holds},
                 {"holds_nondegenerate", rep.holds_nondegenerate},
                 {"passed", rep.passed}});
    return rep.passed ? 0 : 1;
}

int run_pattern_m(std::int64_t b, int s, int w, int colours, const std::string& eq_text,
                  std::uint64_t trials, Emitter& em) {
    ramsey::EquationSpec eq = ramsey::EquationSpec::parse(eq_text);
    ramsey::PatternM pat{b, s, w};
    std::uint64_t found = 0, case1 = 0, case2 = 0, failures = 0;
    std::string first_failure;
    for (std::uint64_t t = 0; t < trials; ++t) {
        ramsey::PatternMColouring col = ramsey::random_pattern_colouring(pat, colours, em.seed + t);
        std::optional<ramsey::PatternWitness> wit =
            eq.to_string() == "1,1" ? ramsey::find_in_pattern_M(col)
                                    : ramsey::find_in_pattern_M_general(eq, col);
        if (!wit) continue;
        ++found;
        if (wit->case_used == 1) ++case1;
        if (wit->case_used == 2) ++case2;
        std::string why;
        if (!ramsey::verify_pattern_witness(eq, col, *wit, &why)) {
            ++failures;
            if (first_failure.empty())
                first_failure = "trial " + std::to_string(t) + ": " + why;
        }
    }
    std::cout << "pattern grid b=" << b << " S=" << s << " W=" << w << ", " << colours
              << " colours, equation " << eq.to_string() << "\n";
    std::cout << trials << " seeded colourings: " << found << " witnesses (case 1: " << case1
              << ", case 2: " << case2 << "), " << failures << " re-verification failures\n";
    if (!first_failure.empty()) std::cout << "first failure: " << first_failure << "\n";
    json result{{"b", b},       {"s", s},         {"w", w},
                {"r", colours}, {"eq", eq.to_string()}, {"trials", trials},
                {"found", found}, {"case1", case1}, {"case2", case2},
                {"failures", failures}};
    em.emit(result);
    return failures == 0 ? 0 : 1;
}

int run_minimize(const std::string& eq_text, int colours, std::int64_t n, std::size_t budget,
                 Emitter& em) {
    ramsey::EquationSpec eq = ramsey::EquationSpec::parse(eq_text);
    ramsey::MinimizeReport rep = ramsey::minimize(eq, colours, n, budget);
    std::cout << "minimum monochromatic count for " << eq.to_string() << " on [2, " << n
              << "] with " << colours << " colours: " << rep.minimum << "\n";
    std::cout << rep.participating << " participating elements, " << rep.nodes
              << " nodes explored\n";
    em.emit(json{{"eq", eq.to_string()},
                 {"r", colours},
                 {"n", n},
                 {"minimum", rep.minimum},
                 {"participating", rep.participating},
                 {"nodes", rep.nodes},
                 {"witness", cells_string(rep.witness)}});
    return 0;
}

int run_stability(const std::string& colouring_file, Emitter& em) {
    ramsey::DiscreteColouring c = ramsey::parse_colouring(read_file(colouring_file));
    ramsey::StabilityReport rep = ramsey::stability_check(c);
    if (!rep.applicable)
        std::cout << "no monochromatic solutions: statement not applicable\n";
    else if (rep.vacuous)
        std::cout << "M = " << rep.mono_count << ", prefix bound " << rep.prefix_end
                  << " < 3: vacuously fine\n";
    else
        std::cout << "M = " << rep.mono_count << ", prefix [2, " << rep.prefix_end << "] is "
                  << (rep.prefix_monochromatic ? "monochromatic" : "NOT monochromatic") << "\n";
    em.emit(json{{"n", rep.n},
                 {"mono_count", rep.mono_count},
                 {"prefix_end", rep.prefix_end},
                 {"applicable", rep.applicable},
                 {"vacuous", rep.vacuous},
                 {"prefix_monochromatic", rep.prefix_monochromatic},
                 {"passed", rep.passed}});
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics for monochromatic solutions to multiplicative equations"};
    app.require_subcommand(1);

    std::string eq_text = "1,1", range_text, colouring_file, json_path;
    std::string name, lift_file, out_file, system, cnf_file, template_file, certify_file;
    std::int64_t n = 0, m = 0, limit = 200, a = 0, l = 0, k = 0, b = 3;
    int colours = 2, jobs_flag = 0, s = 5, w = 64;
    std::uint64_t trials = 100, seed = 7;
    std::size_t budget = 64;
    bool non_degenerate = false, want_extremals = false;

    CLI::App* count = app.add_subcommand("count", "count solutions over an integer range");
    count->add_option("--eq", eq_text, "exponents, e.g. 1,2")->required();
    count->add_option("--range", range_text, "LO..HI")->required();
    count->add_option("--colouring", colouring_file, "colouring file: 'lo hi r' then one row of cells");
    count->add_flag("--non-degenerate", non_degenerate, "skip tuples with repeated x_i");
    count->add_option("--jobs", jobs_flag, "worker count (env RAMSEY_MULT_JOBS, then hardware)");
    count->add_option("--json", json_path, "write canonical JSON report here");

    CLI::App* construct = app.add_subcommand("construct", "build a named or lifted colouring");
    construct->add_option("--name", name, "one of the named interval constructions");
    construct->add_option("--lift", lift_file, "interval template JSON to lift");
    construct->add_option("--n", n, "domain end N")->required();
    construct->add_option("--m", m, "lift base M (default: least M with M^T reaching N)");
    construct->add_option("--out", out_file, "write the colouring here");
    construct->add_option("--json", json_path, "write canonical JSON report here");

    CLI::App* search = app.add_subcommand("search", "threshold search for additive systems");
    search->add_option("--system", system, "schur | schur-star | rado | rado-star")->required();
    search->add_option("--eq", eq_text, "coefficients for rado systems");
    search->add_option("--colours", colours, "number of colours")->required();
    search->add_option("--limit", limit, "search cap (error if the threshold exceeds it)");
    search->add_flag("--enumerate-extremals", want_extremals, "list extremal colourings");
    search->add_option("--cnf", cnf_file, "export a DIMACS instance");
    search->add_option("--n", n, "skip the threshold search, work at this N");
    search->add_option("--jobs", jobs_flag, "worker count");
    search->add_option("--json", json_path, "write canonical JSON report here");

    CLI::App* icheck = app.add_subcommand("interval-check", "decide solution-freeness of a real template");
    icheck->add_option("--eq", eq_text, "exponents, e.g. 1,1")->required();
    icheck->add_option("--template", template_file, "interval colouring JSON")->required();
    icheck->add_option("--certify", certify_file, "write a lower-bound certificate here");
    icheck->add_option("--json", json_path, "write canonical JSON report here");

    CLI::App* verify = app.add_subcommand("verify", "check the constructive lemmas");
    verify->require_subcommand(1);
    CLI::App* lemma31 = verify->add_subcommand("lemma31", "product pattern T(a,l,k)");
    lemma31->add_option("--a", a, "divisor parameter")->required();
    lemma31->add_option("--l", l, "first generator")->required();
    lemma31->add_option("--k", k, "second generator")->required();
    lemma31->add_option("--json", json_path, "write canonical JSON report here");
    CLI::App* patternm = verify->add_subcommand("pattern-m", "proof-procedure finder on the power grid");
    patternm->add_option("--b", b, "odd grid base");
    patternm->add_option("--s", s, "rows");
    patternm->add_option("--w", w, "columns");
    patternm->add_option("--colours", colours, "number of colours");
    patternm->add_option("--eq", eq_text, "exponents (default 1,1)");
    patternm->add_option("--trials", trials, "random colourings to try");
    patternm->add_option("--seed", seed, "base seed; trial t uses seed+t");
    patternm->add_option("--json", json_path, "write canonical JSON report here");

    CLI::App* minimize = app.add_subcommand("minimize", "exact minimum monochromatic count");
    minimize->add_option("--eq", eq_text, "exponents")->required();
    minimize->add_option("--colours", colours, "number of colours")->required();
    minimize->add_option("--n", n, "domain end N")->required();
    minimize->add_option("--budget", budget, "max participating elements");
    minimize->add_option("--json", json_path, "write canonical JSON report here");

    CLI::App* stability = app.add_subcommand("stability", "monochromatic-prefix statement");
    stability->add_option("--colouring", colouring_file, "2-colouring file")->required();
    stability->add_option("--json", json_path, "write canonical JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Emitter em;
    em.argv.assign(argv, argv + argc);
    em.json_path = json_path;
    em.jobs = resolve_jobs(jobs_flag);

    try {
        if (count->parsed()) {
            em.subcommand = "count";
            return run_count(eq_text, range_text, colouring_file, non_degenerate, em);
        }
        if (construct->parsed()) {
            em.subcommand = "construct";
            if (name.empty() == lift_file.empty())
                throw std::invalid_argument("construct wants exactly one of --name / --lift");
            return run_construct(name, lift_file, n, m, out_file, em);
        }
        if (search->parsed()) {
            em.subcommand = "search";
            return run_search(system, search->count("--eq") ? eq_text : "", colours, limit,
                              want_extremals, cnf_file, n, em);
        }
        if (icheck->parsed()) {
            em.subcommand = "interval-check";
            return run_interval_check(eq_text, template_file, certify_file, em);
        }
        if (lemma31->parsed()) {
            em.subcommand = "verify lemma31";
            return run_lemma31(a, l, k, em);
        }
        if (patternm->parsed()) {
            em.subcommand = "verify pattern-m";
            em.seeded = true;
            em.seed = seed;
            return run_pattern_m(b, s, w, colours, eq_text, trials, em);
        }
        if (minimize->parsed()) {
            em.subcommand = "minimize";
            return run_minimize(eq_text, colours, n, budget, em);
        }
        if (stability->parsed()) {
            em.subcommand = "stability";
            return run_stability(colouring_file, em);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
