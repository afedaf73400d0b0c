#include "ramsey/additive.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <thread>

namespace ramsey {

AdditiveSystem make_additive_system(const std::string& kind_name,
                                    const std::optional<EquationSpec>& eq) {
    AdditiveSystem sys;
    if (kind_name == "schur")
        sys.kind = AdditiveKind::schur;
    else if (kind_name == "schur-star" || kind_name == "schur_star")
        sys.kind = AdditiveKind::schur_star;
    else if (kind_name == "rado")
        sys.kind = AdditiveKind::rado;
    else if (kind_name == "rado-star" || kind_name == "rado_star")
        sys.kind = AdditiveKind::rado_star;
    else
        throw std::invalid_argument("unknown system '" + kind_name + "'");
    if (sys.kind == AdditiveKind::rado || sys.kind == AdditiveKind::rado_star) {
        if (!eq) throw std::invalid_argument("rado systems need --eq coefficients");
        if (!eq->partition_regular())
            throw std::invalid_argument(
                "rado system needs a unit coefficient, otherwise no finite threshold is guaranteed");
        sys.eq = eq;
    }
    return sys;
}

std::string additive_kind_name(AdditiveKind kind) {
    switch (kind) {
        case AdditiveKind::schur: return "schur";
        case AdditiveKind::schur_star: return "schur-star";
        case AdditiveKind::rado: return "rado";
        case AdditiveKind::rado_star: return "rado-star";
    }
    return "?";
}

namespace {

void rado_supports(const std::vector<int>& coef, std::int64_t target, std::int64_t y,
                   std::set<std::vector<std::int64_t>>& out) {
    // ordered tuples x_i >= 1 with sum coef_i * x_i == target; records sorted unique support + y
    std::vector<std::int64_t> xs(coef.size());
    std::vector<std::int64_t> tail_min(coef.size() + 1, 0);
    for (std::size_t i = coef.size(); i-- > 0;) tail_min[i] = tail_min[i + 1] + coef[i];
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t rem) -> void {
        if (idx + 1 == coef.size()) {
            if (rem >= coef[idx] && rem % coef[idx] == 0) {
                xs[idx] = rem / coef[idx];
                std::vector<std::int64_t> sup(xs.begin(), xs.end());
                sup.push_back(y);
                std::sort(sup.begin(), sup.end());
                sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
                out.insert(std::move(sup));
            }
            return;
        }
        std::int64_t cap = (rem - tail_min[idx + 1]) / coef[idx];
        for (std::int64_t v = 1; v <= cap; ++v) {
            xs[idx] = v;
            self(self, idx + 1, rem - coef[idx] * v);
        }
    };
    if (target >= tail_min[0]) rec(rec, 0, target);
}

}  // namespace

std::vector<std::vector<std::int64_t>> solution_supports_at(const AdditiveSystem& sys,
                                                            std::int64_t n) {
    std::set<std::vector<std::int64_t>> out;
    switch (sys.kind) {
        case AdditiveKind::schur:
            rado_supports({1, 1}, n, n, out);
            break;
        case AdditiveKind::schur_star:
            rado_supports({1, 1}, n, n, out);
            rado_supports({1, 1}, n - 1, n, out);
            break;
        case AdditiveKind::rado:
            rado_supports(sys.eq->exponents(), n, n, out);
            break;
        case AdditiveKind::rado_star:
            rado_supports(sys.eq->exponents(), n, n, out);
            rado_supports(sys.eq->exponents(), n - 1, n, out);
            break;
    }
    return {out.begin(), out.end()};
}

namespace {

struct Searcher {
    int r;
    std::int64_t target;
    const std::vector<std::vector<std::vector<std::int64_t>>>& supports;
    bool stop_at_target = false;
    bool collect = false;

    std::vector<int> colour;
    std::uint64_t nodes = 0;
    std::int64_t max_reached = 0;
    std::vector<DiscreteColouring> leaves;
    std::atomic<bool>* abort = nullptr;

    Searcher(int r_, std::int64_t target_,
             const std::vector<std::vector<std::vector<std::int64_t>>>& supports_)
        : r(r_), target(target_), supports(supports_), colour(target_ + 1, 0) {}

    bool conflict(std::int64_t n) const {
        int cn = colour[n];
        for (const auto& sup : supports[n]) {
            bool mono = true;
            for (std::int64_t e : sup)
                if (colour[e] != cn) {
                    mono = false;
                    break;
                }
            if (mono) return true;
        }
        return false;
    }

    void emit_leaf() {
        DiscreteColouring c(1, target, r);
        for (std::int64_t x = 1; x <= target; ++x) c.set(x, colour[x]);
        leaves.push_back(std::move(c));
    }

    void dfs(std::int64_t n, int used) {
        int cap = std::min(used + 1, r);
        for (int ch = 1; ch <= cap; ++ch) {
            if (abort && abort->load(std::memory_order_relaxed)) return;
            colour[n] = ch;
            ++nodes;
            if (!conflict(n)) {
                if (n > max_reached) max_reached = n;
                if (n == target) {
                    if (collect) emit_leaf();
                    if (stop_at_target) {
                        if (abort) abort->store(true, std::memory_order_relaxed);
                        colour[n] = 0;
                        return;
                    }
                } else {
                    dfs(n + 1, std::max(used, ch));
                }
            }
        }
        colour[n] = 0;
    }
};

std::vector<std::vector<std::vector<std::int64_t>>> all_supports(const AdditiveSystem& sys,
                                                                 std::int64_t up_to) {
    std::vector<std::vector<std::vector<std::int64_t>>> sup(up_to + 1);
    for (std::int64_t n = 1; n <= up_to; ++n) sup[n] = solution_supports_at(sys, n);
    return sup;
}

// prefix-split parallel driver; with jobs <= 1 runs the plain search
Searcher run_search(int r, std::int64_t target, bool stop_at_target, bool collect, int jobs,
                    const std::vector<std::vector<std::vector<std::int64_t>>>& supports) {
    Searcher root(r, target, supports);
    root.stop_at_target = stop_at_target;
    root.collect = collect;
    std::atomic<bool> abort{false};
    root.abort = &abort;
    if (jobs <= 1 || target <= 9) {
        root.dfs(1, 0);
        return root;
    }

    std::int64_t split = std::min<std::int64_t>(8, target - 1);
    Searcher prober(r, split, supports);
    prober.collect = true;
    prober.dfs(1, 0);
    root.nodes = prober.nodes;

    struct Slot {
        std::uint64_t nodes = 0;
        std::int64_t max_reached = 0;
        std::vector<DiscreteColouring> leaves;
    };
    std::vector<Slot> slots(prober.leaves.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= prober.leaves.size()) return;
            const DiscreteColouring& prefix = prober.leaves[idx];
            Searcher s(r, target, supports);
            s.stop_at_target = stop_at_target;
            s.collect = collect;
            s.abort = &abort;
            int used = 0;
            for (std::int64_t x = 1; x <= split; ++x) {
                s.colour[x] = prefix.at(x);
                used = std::max(used, prefix.at(x));
                s.max_reached = x;
            }
            s.dfs(split + 1, used);
            slots[idx] = {s.nodes, s.max_reached, std::move(s.leaves)};
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();

    root.max_reached = prober.max_reached;
    for (Slot& s : slots) {
        root.nodes += s.nodes;
        root.max_reached = std::max(root.max_reached, s.max_reached);
        for (DiscreteColouring& c : s.leaves) root.leaves.push_back(std::move(c));
    }
    return root;
}

int used_colours(const DiscreteColouring& c) {
    int used = 0;
    for (std::int64_t x = c.lo(); x <= c.hi(); ++x) used = std::max(used, c.at(x));
    return used;
}

}  // namespace

std::uint64_t colour_relabellings(int r, int used) {
    std::uint64_t out = 1;
    for (int i = 0; i < used; ++i) out *= static_cast<std::uint64_t>(r - i);
    return out;
}

SearchReport find_threshold(const AdditiveSystem& sys, int r, std::int64_t limit,
                            bool want_extremals, int jobs) {
    if (r < 1) throw std::invalid_argument("need r >= 1 colours");
    if (limit < 1) throw std::invalid_argument("need limit >= 1");
    if (r >= 5 && (sys.kind == AdditiveKind::schur || sys.kind == AdditiveKind::schur_star))
        throw OutOfScopeError("out of desk-scale scope: 5 or more colours for " +
                              additive_kind_name(sys.kind) + " needs SAT-scale machinery");

    auto start = std::chrono::steady_clock::now();
    auto supports = all_supports(sys, limit);
    Searcher probe = run_search(r, limit, true, false, jobs, supports);
    if (probe.max_reached >= limit)
        throw LimitExceededError("threshold exceeds limit " + std::to_string(limit));

    SearchReport rep;
    rep.threshold = probe.max_reached + 1;
    rep.r = r;
    rep.nodes_visited = probe.nodes;
    if (probe.max_reached >= 1) {
        Searcher leaves = run_search(r, probe.max_reached, false, true, jobs, supports);
        rep.nodes_visited += leaves.nodes;
        rep.extremal_count = leaves.leaves.size();
        for (const DiscreteColouring& c : leaves.leaves)
            rep.raw_extremal_count += colour_relabellings(r, used_colours(c));
        if (want_extremals) rep.extremals = std::move(leaves.leaves);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

std::vector<DiscreteColouring> enumerate_extremals(const AdditiveSystem& sys, int r,
                                                   std::int64_t n, int jobs) {
    if (r < 1) throw std::invalid_argument("need r >= 1 colours");
    if (n < 1) throw std::invalid_argument("need n >= 1");
    auto supports = all_supports(sys, n);
    Searcher s = run_search(r, n, false, true, jobs, supports);
    return std::move(s.leaves);
}

bool colouring_is_valid(const AdditiveSystem& sys, const DiscreteColouring& c) {
    if (c.lo() != 1) throw std::invalid_argument("additive colourings live on [1, N]");
    std::int64_t n = c.hi();
    bool star = sys.kind == AdditiveKind::schur_star || sys.kind == AdditiveKind::rado_star;
    std::vector<int> coef{1, 1};
    if (sys.kind == AdditiveKind::rado || sys.kind == AdditiveKind::rado_star)
        coef = sys.eq->exponents();

    std::vector<std::int64_t> xs(coef.size());
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t sum) -> bool {
        if (idx == coef.size()) {
            for (std::int64_t y : {sum, sum + 1}) {
                if (y == sum + 1 && !star) continue;
                if (y < 1 || y > n) continue;
                int col = c.at(y);
                bool mono = true;
                for (std::int64_t x : xs)
                    if (c.at(x) != col) {
                        mono = false;
                        break;
                    }
                if (mono) return true;  // found a monochromatic solution
            }
            return false;
        }
        for (std::int64_t v = 1; v <= n; ++v) {
            if (sum + coef[idx] * v > n + 1) break;
            xs[idx] = v;
            if (self(self, idx + 1, sum + coef[idx] * v)) return true;
        }
        return false;
    };
    return !rec(rec, 0, 0);
}

Template5Report check_template_5(const std::vector<DiscreteColouring>& cols) {
    constexpr int R = 1, B = 2, G = 3, P = 4;
    // 0 means wildcard; classes listed per position below
    static const int fixed[41] = {0, R, B, B, R, G, G, 0, G, G, R, B, B, R,  // 1..13
                                  P, P, 0, P, P, 0, 0, 0, 0, P, P, 0, P, P,  // 14..27
                                  R, B, B, R, G, G, 0, G, G, R, B, B, R};    // 28..40
    static const std::vector<int> rg{R, G}, rp{R, P}, bgp{B, G, P};
    auto wildcard_class = [&](int pos) -> const std::vector<int>& {
        if (pos == 7 || pos == 34) return rg;
        if (pos == 20 || pos == 21) return bgp;
        return rp;  // 16, 19, 22, 25
    };

    Template5Report rep;
    rep.cardinality = 2ull * 2 * 16 * 9;
    rep.all_match = true;
    int perm[4] = {1, 2, 3, 4};  // perm[c-1] = letter assigned to colour c
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const DiscreteColouring& c = cols[idx];
        if (c.lo() != 1 || c.hi() != 40 || c.r() != 4)
            throw std::invalid_argument("template check needs 4-colourings of [1, 40]");
        std::sort(perm, perm + 4);
        bool matched = false;
        do {
            bool ok = true;
            for (int pos = 1; pos <= 40 && ok; ++pos) {
                int letter = perm[c.at(pos) - 1];
                if (fixed[pos] != 0) {
                    ok = letter == fixed[pos];
                } else {
                    const std::vector<int>& cls = wildcard_class(pos);
                    ok = std::find(cls.begin(), cls.end(), letter) != cls.end();
                }
            }
            if (ok) {
                matched = true;
                break;
            }
        } while (std::next_permutation(perm, perm + 4));
        ++rep.checked;
        if (!matched) {
            rep.all_match = false;
            rep.first_mismatch = idx;
            break;
        }
    }
    return rep;
}

std::vector<AbbottHansonCheck> check_abbott_hanson(
    const std::map<int, std::int64_t>& schur_values,
    const std::map<int, std::int64_t>& schur_star_values,
    const std::vector<std::pair<int, int>>& pairs) {
    std::vector<AbbottHansonCheck> out;
    for (auto [r, t] : pairs) {
        auto s = schur_values.find(r);
        auto st = schur_star_values.find(t);
        auto srt = schur_star_values.find(r + t);
        if (s == schur_values.end()) throw std::invalid_argument("missing S(" + std::to_string(r) + ")");
        if (st == schur_star_values.end())
            throw std::invalid_argument("missing S*(" + std::to_string(t) + ")");
        if (srt == schur_star_values.end())
            throw std::invalid_argument("missing S*(" + std::to_string(r + t) + ")");
        AbbottHansonCheck chk;
        chk.r = r;
        chk.t = t;
        chk.s_r = s->second;
        chk.s_star_t = st->second;
        chk.s_star_rt = srt->second;
        chk.rhs = 2 * chk.s_r * chk.s_star_t - chk.s_r - chk.s_star_t + 1;
        chk.pass = chk.s_star_rt >= chk.rhs;
        chk.tight = chk.s_star_rt == chk.rhs;
        out.push_back(chk);
    }
    return out;
}

std::uint64_t export_cnf(const AdditiveSystem& sys, int r, std::int64_t n,
                         const std::string& path) {
    if (r < 1 || n < 1) throw std::invalid_argument("export_cnf needs r >= 1, n >= 1");
    auto var = [r](std::int64_t x, int c) { return (x - 1) * r + c; };

    std::vector<std::vector<std::int64_t>> supports;
    for (std::int64_t m = 1; m <= n; ++m)
        for (auto& sup : solution_supports_at(sys, m)) supports.push_back(std::move(sup));

    std::uint64_t clauses = static_cast<std::uint64_t>(n) +
                            static_cast<std::uint64_t>(n) * r * (r - 1) / 2 +
                            supports.size() * static_cast<std::uint64_t>(r);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "c solution-free colouring instance: system=" << additive_kind_name(sys.kind)
        << " r=" << r << " n=" << n << "\n";
    out << "p cnf " << n * r << " " << clauses << "\n";
    for (std::int64_t x = 1; x <= n; ++x) {
        for (int c = 1; c <= r; ++c) out << var(x, c) << " ";
        out << "0\n";
    }
    for (std::int64_t x = 1; x <= n; ++x)
        for (int c1 = 1; c1 <= r; ++c1)
            for (int c2 = c1 + 1; c2 <= r; ++c2)
                out << -var(x, c1) << " " << -var(x, c2) << " 0\n";
    for (const auto& sup : supports)
        for (int c = 1; c <= r; ++c) {
            for (std::int64_t e : sup) out << -var(e, c) << " ";
            out << "0\n";
        }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
    return clauses;
}

}
