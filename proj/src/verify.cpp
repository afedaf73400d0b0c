#include "ramsey/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ramsey/counting.hpp"

namespace ramsey {

Lemma31Report verify_lemma31(std::int64_t a, std::int64_t l, std::int64_t k) {
    if (a < 2 || l < 2 || k < 2) throw std::invalid_argument("pattern needs a, l, k >= 2");
    Lemma31Report rep;
    rep.a = a;
    rep.l = l;
    rep.k = k;
    rep.premise_possible = l != k;
    rep.side_conditions = a != l && a != k && a != l * k && k != l * a && k != l * l * a &&
                          l != k * a;
    if (!rep.premise_possible) {  // no colouring can satisfy c(l) != c(k)
        rep.holds = rep.holds_nondegenerate = rep.passed = true;
        return rep;
    }

    std::vector<std::int64_t> vals{l, k, l * k, a, l * a, k * a, l * k * a, l * l * a, l * l * k * a};
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::size_t n = vals.size();
    auto index_of = [&](std::int64_t v) {
        return static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
    };
    std::size_t il = index_of(l), ik = index_of(k);

    rep.holds = rep.holds_nondegenerate = true;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto colour = [&](std::size_t idx) { return (mask >> idx) & 1u; };
        if (colour(il) != 0) continue;  // fix c(l), colours are symmetric
        if (colour(ik) == colour(il)) continue;
        ++rep.colourings_checked;
        bool any = false, any_distinct = false;
        for (std::size_t xi = 0; xi < n && !any_distinct; ++xi) {
            for (std::size_t yi = xi; yi < n; ++yi) {
                if (colour(yi) != colour(xi)) continue;
                std::int64_t z = vals[xi] * vals[yi];
                if (z % a != 0) continue;
                auto it = std::lower_bound(vals.begin(), vals.end(), z);
                if (it == vals.end() || *it != z) continue;
                if (colour(static_cast<std::size_t>(it - vals.begin())) != colour(xi)) continue;
                any = true;
                if (xi != yi) {
                    any_distinct = true;
                    break;
                }
            }
        }
        if (!any) rep.holds = false;
        if (!any_distinct) rep.holds_nondegenerate = false;
        if (!rep.holds && !rep.holds_nondegenerate) break;
    }
    rep.passed = rep.holds && (!rep.side_conditions || rep.holds_nondegenerate);
    return rep;
}

PatternMColouring random_pattern_colouring(const PatternM& pat, int r, std::uint64_t seed) {
    if (pat.b < 2 || pat.b % 2 == 0)
        throw std::invalid_argument("pattern needs odd b >= 3 so that elements do not collide");
    if (pat.s < 1 || pat.w < 1) throw std::invalid_argument("pattern needs S, W >= 1");
    if (r < 1 || r > 9) throw std::invalid_argument("pattern colours must be in 1..9");
    PatternMColouring col;
    col.pat = pat;
    col.r = r;
    std::mt19937_64 gen(seed);
    col.grid.resize(static_cast<std::size_t>(pat.s) * pat.w);
    col.mprime.resize(static_cast<std::size_t>(pat.w));
    for (int& c : col.grid) c = static_cast<int>(gen() % r) + 1;
    for (int& c : col.mprime) c = static_cast<int>(gen() % r) + 1;
    return col;
}

int pattern_element_colour(const PatternMColouring& col, const BigInt& value) {
    if (value < 2) return 0;
    BigInt rest = value;
    int i = 0;
    while (rest % col.pat.b == 0) {
        rest /= col.pat.b;
        ++i;
    }
    if (rest == 1) return 0;  // pure power of b is not an element
    unsigned alpha = boost::multiprecision::msb(rest);
    if ((BigInt(1) << alpha) != rest) return 0;  // leftover must be a power of two
    if (i == 0) {
        if (alpha < 1 || alpha > static_cast<unsigned>(col.pat.w)) return 0;
        return col.prime_at(static_cast<int>(alpha));
    }
    if (i > col.pat.s) return 0;
    if (alpha % static_cast<unsigned>(i) != 0) return 0;
    unsigned j = alpha / static_cast<unsigned>(i);
    if (j < 1 || j > static_cast<unsigned>(col.pat.w)) return 0;
    return col.at(i, static_cast<int>(j));
}

namespace {

BigInt grid_element(const PatternM& pat, int i, int j) {
    return ipow((BigInt(1) << j) * pat.b, static_cast<std::uint64_t>(i));
}

struct Engine {
    const EquationSpec& eq;
    const PatternMColouring& col;
    int s, w, r, k, big_a;  // big_a = sum of the non-unit exponents a_2..a_k

    Engine(const EquationSpec& eq_, const PatternMColouring& col_)
        : eq(eq_), col(col_), s(col_.pat.s), w(col_.pat.w), r(col_.r), k(eq_.k()),
          big_a(eq_.exponent_sum() - 1) {
        if (eq.exponents().front() != 1)
            throw std::invalid_argument("pattern finder needs a unit exponent");
        if (col.pat.b % 2 == 0) throw std::invalid_argument("pattern finder needs odd b");
        if (col.grid.size() != static_cast<std::size_t>(s) * w ||
            col.mprime.size() != static_cast<std::size_t>(w))
            throw std::invalid_argument("colouring does not match the pattern dimensions");
        for (int c : col.grid)
            if (c < 1 || c > r) throw std::invalid_argument("grid colour outside 1..r");
        for (int c : col.mprime)
            if (c < 1 || c > r) throw std::invalid_argument("side-row colour outside 1..r");
    }

    bool columns_equal(int j1, int j2) const {
        for (int i = 1; i <= s; ++i)
            if (col.at(i, j1) != col.at(i, j2)) return false;
        return true;
    }

    int run_length(int j0, int d) const {
        int len = 1;
        while (j0 + len * d <= w && columns_equal(j0, j0 + len * d)) ++len;
        return len;
    }

    // case 1: some colour repeats enough in column j0; lift an additive solution
    // sum a_s i_s = t between equal-coloured rows, then shift by h_n to break repeats
    std::optional<PatternWitness> try_case1(int j0, int d, int len) const {
        const std::vector<int>& a = eq.exponents();
        std::map<int, std::vector<int>> classes;  // colour -> rows
        for (int i = 1; i <= s; ++i) classes[col.at(i, j0)].push_back(i);
        for (const auto& [colour_id, rows] : classes) {
            std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
            while (true) {
                long long target = 0;
                for (int n = 0; n < k; ++n) target += static_cast<long long>(a[n]) * rows[pick[n]];
                if (target <= s &&
                    std::binary_search(rows.begin(), rows.end(), static_cast<int>(target))) {
                    int t = static_cast<int>(target);
                    std::vector<int> is(static_cast<std::size_t>(k));
                    for (int n = 0; n < k; ++n) is[n] = rows[pick[n]];
                    std::vector<int> hs(static_cast<std::size_t>(k), 0);
                    for (int n = 1; n < k; ++n) {
                        int h = 0;
                        for (int m = 0; m < n; ++m)
                            if (is[m] == is[n] && hs[m] == h) {
                                ++h;
                                m = -1;  // restart scan with the bumped candidate
                            }
                        hs[n] = h;
                    }
                    long long mu = 0;
                    for (int n = 0; n < k; ++n) mu += static_cast<long long>(a[n]) * hs[n] * is[n];
                    long long span = mu;
                    for (int n = 0; n < k; ++n)
                        span = std::max(span, static_cast<long long>(t) * hs[n]);
                    if (span <= len - 1) {
                        PatternWitness wit;
                        wit.case_used = 1;
                        wit.j0 = j0;
                        wit.d = d;
                        wit.run = len;
                        wit.is = is;
                        wit.t = t;
                        wit.hs = hs;
                        wit.sol.colour = colour_id;
                        for (int n = 0; n < k; ++n)
                            wit.sol.xs.push_back(grid_element(col.pat, is[n], j0 + d * t * hs[n]));
                        wit.sol.y = grid_element(col.pat, t, j0 + static_cast<int>(mu) * d);
                        return wit;
                    }
                }
                int pos = k - 1;
                while (pos >= 0 && ++pick[pos] == rows.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
        return std::nullopt;
    }

    // case 2: column j0 shows all r colours; solve x_2^{a_2}...x_k^{a_k} = y^A inside
    // the power-of-two row, then match its colour back into the column
    std::optional<PatternWitness> try_case2(int j0, int d, int len) const {
        std::int64_t max_mult = w / d;
        for (std::int64_t f = 1; f <= max_mult; ++f) {
            int gamma = col.prime_at(static_cast<int>(d * f));
            std::vector<std::int64_t> us;
            if (k == 2) {
                us = {f};  // a_2 u_2 = A f with A = a_2 forces u_2 = f
            } else {
                if (!pick_distinct_us(f, d, gamma, us)) continue;
            }
            for (int i = 1; i <= s; ++i) {
                if (col.at(i, j0) != gamma) continue;
                std::int64_t product_exp = static_cast<std::int64_t>(big_a) * f;
                if (product_exp % i != 0) continue;
                std::int64_t tstar = product_exp / i;
                if (tstar > len - 1) continue;
                PatternWitness wit;
                wit.case_used = 2;
                wit.j0 = j0;
                wit.d = d;
                wit.run = len;
                wit.us = us;
                wit.v = f;
                wit.i = i;
                wit.sol.colour = gamma;
                wit.sol.xs.push_back(grid_element(col.pat, i, j0));
                for (std::size_t sidx = 0; sidx < us.size(); ++sidx)
                    wit.sol.xs.push_back(BigInt(1) << (d * us[sidx]));
                wit.sol.y = grid_element(col.pat, i, j0 + static_cast<int>(tstar) * d);
                return wit;
            }
        }
        return std::nullopt;
    }

    // distinct u_2..u_k and v = f with sum a_s u_s = A f, all their power-of-two
    // elements coloured like 2^{df}; smallest-lex choice
    bool pick_distinct_us(std::int64_t f, int d, int gamma, std::vector<std::int64_t>& out) const {
        const std::vector<int>& a = eq.exponents();
        std::int64_t max_mult = w / d;
        std::vector<std::int64_t> us(static_cast<std::size_t>(k - 1), 0);
        auto rec = [&](auto&& self, int idx, std::int64_t rem) -> bool {
            if (idx == k - 1) {  // all chosen; rem must be zero
                return rem == 0;
            }
            std::int64_t coef = a[idx + 1];
            std::int64_t hi = std::min<std::int64_t>(max_mult, rem / coef);
            for (std::int64_t u = 1; u <= hi; ++u) {
                if (u == f) continue;
                bool dup = false;
                for (int m = 0; m < idx; ++m)
                    if (us[m] == u) dup = true;
                if (dup) continue;
                if (col.prime_at(static_cast<int>(d * u)) != gamma) continue;
                us[idx] = u;
                if (idx == k - 2) {
                    if (rem - coef * u == 0) {
                        out = us;
                        return true;
                    }
                } else if (self(self, idx + 1, rem - coef * u)) {
                    return true;
                }
            }
            return false;
        };
        return rec(rec, 0, static_cast<std::int64_t>(big_a) * f);
    }

    std::optional<PatternWitness> run() const {
        for (int d = 1; d < w; ++d) {
            for (int j0 = 1; j0 + d <= w; ++j0) {
                if (!columns_equal(j0, j0 + d)) continue;
                int len = run_length(j0, d);
                std::set<int> colours;
                for (int i = 1; i <= s; ++i) colours.insert(col.at(i, j0));
                std::optional<PatternWitness> wit = static_cast<int>(colours.size()) < r
                                                        ? try_case1(j0, d, len)
                                                        : try_case2(j0, d, len);
                if (wit) return wit;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<PatternWitness> find_in_pattern_M(const PatternMColouring& col) {
    static const EquationSpec multiplicative_schur({1, 1});
    return Engine(multiplicative_schur, col).run();
}

std::optional<PatternWitness> find_in_pattern_M_general(const EquationSpec& eq,
                                                        const PatternMColouring& col) {
    return Engine(eq, col).run();
}

bool verify_pattern_witness(const EquationSpec& eq, const PatternMColouring& col,
                            const PatternWitness& wit, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const std::vector<int>& a = eq.exponents();
    if (wit.sol.xs.size() != a.size()) return fail("wrong arity");
    BigInt product(1);
    for (std::size_t n = 0; n < a.size(); ++n)
        product *= ipow(wit.sol.xs[n], static_cast<std::uint64_t>(a[n]));
    if (product != wit.sol.y) return fail("product identity broken");
    if (wit.sol.y % col.pat.b != 0) return fail("target not divisible by b");
    for (std::size_t n = 0; n < wit.sol.xs.size(); ++n)
        for (std::size_t m = n + 1; m < wit.sol.xs.size(); ++m)
            if (wit.sol.xs[n] == wit.sol.xs[m]) return fail("degenerate witness");
    int expected = wit.sol.colour;
    if (expected < 1 || expected > col.r) return fail("colour out of range");
    for (const BigInt& x : wit.sol.xs)
        if (pattern_element_colour(col, x) != expected) return fail("an x is off-colour or outside");
    if (pattern_element_colour(col, wit.sol.y) != expected)
        return fail("target is off-colour or outside");
    return true;
}

namespace {

struct SupportPattern {
    std::vector<std::uint32_t> slots;  // indices into the participating-element list
    std::uint64_t weight = 0;          // ordered tuples sharing this support
};

struct MinimizeSearch {
    int r;
    std::size_t total_slots;
    std::vector<std::vector<SupportPattern>> completing;  // by last slot in branch order
    std::vector<int> assign;
    std::vector<int> best_assign;
    std::uint64_t best = ~0ull;
    std::uint64_t nodes = 0;

    void dfs(std::size_t slot, int used, std::uint64_t bound) {
        ++nodes;
        if (bound >= best) return;
        if (slot == total_slots) {
            best = bound;
            best_assign = assign;
            return;
        }
        int cap = std::min(used + 1, r);
        for (int c = 1; c <= cap; ++c) {
            assign[slot] = c;
            std::uint64_t nb = bound;
            for (const SupportPattern& sup : completing[slot]) {
                bool mono = true;
                for (std::uint32_t member : sup.slots)
                    if (assign[member] != c) {
                        mono = false;
                        break;
                    }
                if (mono) nb += sup.weight;
            }
            if (nb < best) dfs(slot + 1, std::max(used, c), nb);
        }
    }
};

}  // namespace

MinimizeReport minimize(const EquationSpec& eq, int r, std::int64_t n, std::size_t budget) {
    if (n < 2) throw std::invalid_argument("minimize needs N >= 2");
    if (r < 1) throw std::invalid_argument("minimize needs r >= 1");

    std::map<std::vector<std::int64_t>, std::uint64_t> weight_by_support;
    CountQuery all{eq, 2, n, nullptr, false, 1};
    enumerate_solutions(all, [&](const MonoSolution& sol) {
        std::vector<std::int64_t> sup;
        for (const BigInt& x : sol.xs) sup.push_back(x.convert_to<std::int64_t>());
        sup.push_back(sol.y.convert_to<std::int64_t>());
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        ++weight_by_support[sup];
        return true;
    });

    std::map<std::int64_t, std::uint64_t> degree;
    for (const auto& [sup, wgt] : weight_by_support)
        for (std::int64_t v : sup) degree[v] += wgt;
    if (degree.size() > budget)
        throw BudgetExceededError("minimize: " + std::to_string(degree.size()) +
                                  " participating elements exceed budget " + std::to_string(budget));

    // branch on heavy elements first; ties by value for determinism
    std::vector<std::int64_t> order;
    for (const auto& [v, deg] : degree) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](std::int64_t x, std::int64_t y) {
        if (degree[x] != degree[y]) return degree[x] > degree[y];
        return x < y;
    });
    std::map<std::int64_t, std::uint32_t> slot_of;
    for (std::size_t i = 0; i < order.size(); ++i) slot_of[order[i]] = static_cast<std::uint32_t>(i);

    MinimizeSearch search;
    search.r = r;
    search.total_slots = order.size();
    search.completing.resize(order.size());
    search.assign.resize(order.size(), 0);
    for (const auto& [sup, wgt] : weight_by_support) {
        SupportPattern pat;
        for (std::int64_t v : sup) pat.slots.push_back(slot_of[v]);
        pat.weight = wgt;
        std::uint32_t last = *std::max_element(pat.slots.begin(), pat.slots.end());
        search.completing[last].push_back(std::move(pat));
    }
    if (order.empty()) {
        search.best = 0;
    } else {
        search.dfs(0, 0, 0);
    }

    DiscreteColouring witness(2, n, r);
    for (std::size_t i = 0; i < order.size(); ++i) witness.set(order[i], search.best_assign[i]);
    return MinimizeReport{eq,      r,
                          n,       search.best,
                          witness, search.nodes,
                          order.size()};
}

StabilityReport stability_check(const DiscreteColouring& c) {
    if (c.r() != 2) throw std::invalid_argument("stability check is a 2-colour statement");
    if (c.lo() != 2) throw std::invalid_argument("stability check expects a colouring of [2, N]");
    StabilityReport rep;
    rep.n = c.hi();
    static const EquationSpec eq({1, 1});
    CountQuery q{eq, 2, rep.n, &c, false, 1};
    rep.mono_count = count_solutions(q).total;  // degenerate solutions count toward M
    rep.applicable = rep.mono_count >= 1;
    if (!rep.applicable) {
        rep.passed = true;
        return rep;
    }
    rep.prefix_end = rep.n / (16 * static_cast<std::int64_t>(rep.mono_count));
    rep.vacuous = rep.prefix_end < 3;
    if (rep.vacuous) {
        rep.passed = true;
        return rep;
    }
    rep.prefix_monochromatic = true;
    for (std::int64_t x = 2; x <= rep.prefix_end; ++x)
        if (c.at(x) != c.at(2)) {
            rep.prefix_monochromatic = false;
            break;
        }
    rep.passed = rep.prefix_monochromatic;
    return rep;
}

}
