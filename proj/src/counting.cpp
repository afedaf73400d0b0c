#include "ramsey/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ramsey/bigint.hpp"

namespace ramsey {

namespace {

void validate(const CountQuery& q) {
    if (q.lo < 1) throw std::invalid_argument("count: lo must be >= 1");
    if (q.hi < q.lo) throw std::invalid_argument("count: hi must be >= lo");
    if (q.colouring) {
        if (q.colouring->lo() > q.lo || q.colouring->hi() < q.hi)
            throw std::invalid_argument("count: colouring does not cover [lo, hi]");
    }
    if (q.jobs < 1) throw std::invalid_argument("count: jobs must be >= 1");
}

std::uint64_t pow_u64(std::uint64_t x, int e) {
    std::uint64_t r = 1;
    while (e--) r *= x;  // callers guarantee the result fits
    return r;
}

// min product of the suffix a[idx..] with every variable at lo, saturated to cap+1
std::vector<std::uint64_t> suffix_min(const std::vector<int>& a, std::int64_t lo, std::uint64_t cap) {
    std::vector<std::uint64_t> mr(a.size() + 1, 1);
    std::uint64_t sat = cap + 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t v = mr[i + 1];
        for (int e = 0; e < a[i] && v < sat; ++e) {
            if (v > cap / static_cast<std::uint64_t>(lo)) { v = sat; break; }
            v *= static_cast<std::uint64_t>(lo);
        }
        mr[i] = std::min(v, sat);
    }
    return mr;
}

// lexicographic streaming over tuples; the first variable may be range-restricted
// (used to split work across threads). colour_of == nullptr means no colour filter.
template <class F>
bool enum_rec(const std::vector<int>& a, const std::vector<std::uint64_t>& mr, std::int64_t lo,
              std::uint64_t hi, const DiscreteColouring* col, int c0, std::size_t idx,
              std::uint64_t partial, std::uint64_t* xs, std::int64_t first_lo,
              std::int64_t first_hi, F& f) {
    if (idx == a.size()) {
        if (col && col->at(static_cast<std::int64_t>(partial)) != c0) return true;
        return f(xs, partial, c0);
    }
    std::uint64_t budget = hi / partial;
    if (mr[idx + 1] > budget) return true;
    std::uint64_t cap = budget / mr[idx + 1];
    int e = a[idx];
    std::uint64_t xmax = (e == 1) ? cap : u64_kth_root(cap, static_cast<unsigned>(e));
    std::int64_t start = (idx == 0) ? first_lo : lo;
    std::int64_t stop = static_cast<std::int64_t>(std::min<std::uint64_t>(
        xmax, static_cast<std::uint64_t>((idx == 0) ? first_hi : hi)));
    for (std::int64_t x = start; x <= stop; ++x) {
        int c = c0;
        if (col) {
            c = col->at(x);
            if (idx > 0 && c != c0) continue;
        }
        xs[idx] = static_cast<std::uint64_t>(x);
        std::uint64_t xe = pow_u64(static_cast<std::uint64_t>(x), e);
        if (!enum_rec(a, mr, lo, hi, col, c, idx + 1, partial * xe, xs, 0, 0, f)) return false;
    }
    return true;
}

template <class F>
bool enum_tuples(const CountQuery& q, std::int64_t first_lo, std::int64_t first_hi, F f) {
    const std::vector<int>& a = q.eq.exponents();
    std::uint64_t hi = static_cast<std::uint64_t>(q.hi);
    std::vector<std::uint64_t> mr = suffix_min(a, q.lo, hi);
    if (mr[0] > hi) return true;  // even the minimal product exceeds hi
    std::vector<std::uint64_t> xs(a.size());
    return enum_rec(a, mr, q.lo, hi, q.colouring, 0, 0, 1, xs.data(), first_lo, first_hi, f);
}

bool has_repeat(const std::uint64_t* xs, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (xs[i] == xs[j]) return true;
    return false;
}

// ----- value-free fast counting -----

// ordered m-tuples of integers >= lo with product <= X
std::uint64_t count_ones(int m, std::uint64_t lo, std::uint64_t X) {
    if (m == 0) return X >= 1 ? 1 : 0;
    if (m == 1) return X >= lo ? X - lo + 1 : 0;
    if (m == 2) {
        if (lo > X / lo) return 0;
        std::uint64_t total = 0, xlim = X / lo;
        for (std::uint64_t x = lo; x <= xlim;) {
            std::uint64_t quot = X / x;
            std::uint64_t xr = std::min(X / quot, xlim);
            total += (xr - x + 1) * (quot - lo + 1);
            x = xr + 1;
        }
        return total;
    }
    // group equal quotients X/x, recurse one variable down
    std::uint64_t rest = 1, sat = X + 1;
    for (int i = 0; i < m - 1 && rest < sat; ++i)
        rest = (rest > X / lo) ? sat : rest * lo;
    if (rest > X) return 0;
    std::uint64_t total = 0, xlim = X / rest;
    for (std::uint64_t x = lo; x <= xlim;) {
        std::uint64_t quot = X / x;
        std::uint64_t xr = std::min(X / quot, xlim);
        total += (xr - x + 1) * count_ones(m - 1, lo, quot);
        x = xr + 1;
    }
    return total;
}

// ordered tuples with prod x_i^{a_i} <= X, all x_i >= lo; exponents >= 2 looped, ones closed-form
std::uint64_t count_all(const std::vector<int>& a, std::uint64_t lo, std::uint64_t X) {
    int m = 0;
    std::vector<int> big;
    for (int e : a) {
        if (e == 1)
            ++m;
        else
            big.push_back(e);
    }
    std::sort(big.rbegin(), big.rend());

    // min product of remaining big exponents plus the m unit ones, saturated
    std::vector<std::uint64_t> tail(big.size() + 1);
    std::uint64_t sat = X + 1;
    {
        std::uint64_t v = 1;
        for (int i = 0; i < m && v < sat; ++i) v = (v > X / lo) ? sat : v * lo;
        tail[big.size()] = v;
        for (std::size_t i = big.size(); i-- > 0;) {
            v = tail[i + 1];
            for (int e = 0; e < big[i] && v < sat; ++e) v = (v > X / lo) ? sat : v * lo;
            tail[i] = v;
        }
    }

    // recursive loop over the big exponents
    std::function<std::uint64_t(std::size_t, std::uint64_t)> rec =
        [&](std::size_t idx, std::uint64_t rem) -> std::uint64_t {
        if (idx == big.size()) return count_ones(m, lo, rem);
        if (tail[idx] > rem) return 0;
        std::uint64_t cap = rem / tail[idx + 1];
        int e = big[idx];
        std::uint64_t xmax = u64_kth_root(cap, static_cast<unsigned>(e));
        std::uint64_t total = 0;
        for (std::uint64_t x = lo; x <= xmax; ++x) total += rec(idx + 1, rem / pow_u64(x, e));
        return total;
    };
    return rec(0, X);
}

// set-partition Mobius inclusion-exclusion for the non-degenerate count
std::uint64_t count_distinct(const std::vector<int>& a, std::uint64_t lo, std::uint64_t X) {
    std::size_t k = a.size();
    if (k > 8) throw std::invalid_argument("count: non-degenerate fast path supports k <= 8");
    std::vector<int> block(k, 0);
    long long total = 0;
    // restricted growth strings enumerate set partitions
    std::function<void(std::size_t, int)> gen = [&](std::size_t pos, int nblocks) {
        if (pos == k) {
            std::vector<int> collapsed(static_cast<std::size_t>(nblocks), 0);
            std::vector<int> size(static_cast<std::size_t>(nblocks), 0);
            for (std::size_t i = 0; i < k; ++i) {
                collapsed[static_cast<std::size_t>(block[i])] += a[i];
                ++size[static_cast<std::size_t>(block[i])];
            }
            long long mu = 1;
            for (int b = 0; b < nblocks; ++b) {
                long long f = 1;
                for (int j = 2; j < size[static_cast<std::size_t>(b)]; ++j) f *= j;
                mu *= (size[static_cast<std::size_t>(b)] % 2 == 1) ? f : -f;
            }
            total += mu * static_cast<long long>(count_all(collapsed, lo, X));
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            block[pos] = b;
            gen(pos + 1, std::max(nblocks, b + 1));
        }
    };
    gen(0, 0);
    if (total < 0) throw std::logic_error("count: inclusion-exclusion went negative");
    return static_cast<std::uint64_t>(total);
}

CountReport count_streamed(const CountQuery& q, std::int64_t first_lo, std::int64_t first_hi) {
    CountReport rep;
    std::size_t k = q.eq.exponents().size();
    enum_tuples(q, first_lo, first_hi, [&](const std::uint64_t* xs, std::uint64_t, int colour) {
        bool deg = has_repeat(xs, k);
        if (deg && q.non_degenerate_only) return true;
        ++rep.total;
        if (!deg) ++rep.non_degenerate;
        if (q.colouring) {
            ColourCount& cc = rep.per_colour[colour];
            ++cc.total;
            if (!deg) ++cc.non_degenerate;
        }
        return true;
    });
    return rep;
}

}  // namespace

void enumerate_solutions(const CountQuery& q, const std::function<bool(const MonoSolution&)>& visit) {
    validate(q);
    std::size_t k = q.eq.exponents().size();
    enum_tuples(q, q.lo, q.hi, [&](const std::uint64_t* xs, std::uint64_t y, int colour) {
        bool deg = has_repeat(xs, k);
        if (deg && q.non_degenerate_only) return true;
        MonoSolution s;
        s.xs.assign(xs, xs + k);
        s.y = y;
        s.colour = colour;
        s.degenerate = deg;
        return visit(s);
    });
}

std::vector<MonoSolution> collect_solutions(const CountQuery& q, std::size_t limit) {
    std::vector<MonoSolution> out;
    enumerate_solutions(q, [&](const MonoSolution& s) {
        out.push_back(s);
        return out.size() < limit;
    });
    return out;
}

CountReport count_solutions(const CountQuery& q) {
    validate(q);
    if (!q.colouring) {
        CountReport rep;
        std::uint64_t lo = static_cast<std::uint64_t>(q.lo);
        std::uint64_t hi = static_cast<std::uint64_t>(q.hi);
        rep.non_degenerate = count_distinct(q.eq.exponents(), lo, hi);
        rep.total = q.non_degenerate_only ? rep.non_degenerate
                                          : count_all(q.eq.exponents(), lo, hi);
        return rep;
    }
    int jobs = q.jobs;
    std::int64_t span = q.hi - q.lo + 1;
    if (jobs > span) jobs = static_cast<int>(span);
    if (jobs <= 1) return count_streamed(q, q.lo, q.hi);

    // split the x1 range into contiguous chunks; exact merge is order-independent
    std::vector<CountReport> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
        std::int64_t a = q.lo + span * j / jobs;
        std::int64_t b = q.lo + span * (j + 1) / jobs - 1;
        workers.emplace_back([&, j, a, b] { parts[static_cast<std::size_t>(j)] = count_streamed(q, a, b); });
    }
    for (auto& w : workers) w.join();
    CountReport rep;
    for (const CountReport& p : parts) {
        rep.total += p.total;
        rep.non_degenerate += p.non_degenerate;
        for (const auto& [c, cc] : p.per_colour) {
            rep.per_colour[c].total += cc.total;
            rep.per_colour[c].non_degenerate += cc.non_degenerate;
        }
    }
    return rep;
}

std::uint64_t count_pairs_le(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 1) throw std::invalid_argument("count_pairs_le: lo must be >= 1");
    return count_ones(2, lo, hi);
}

int divisor_count(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("divisor_count: n must be >= 1");
    int count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

double zeta_value(int s) {
    if (s < 2) throw std::invalid_argument("zeta_value: s must be >= 2");
    const long double K = 10000.0L;
    long double sum = 0.0L;
    for (long double n = 1.0L; n <= K; n += 1.0L) sum += powl(n, static_cast<long double>(-s));
    // Euler-Maclaurin tail through the Bernoulli B4 term
    long double sd = static_cast<long double>(s);
    sum += powl(K, 1.0L - sd) / (sd - 1.0L);
    sum -= 0.5L * powl(K, -sd);
    sum += sd / 12.0L * powl(K, -sd - 1.0L);
    sum -= sd * (sd + 1.0L) * (sd + 2.0L) / 720.0L * powl(K, -sd - 3.0L);
    return static_cast<double>(sum);
}

AsymptoticConstant asymptotic_constant(const EquationSpec& eq) {
    if (eq.ones() < 1)
        throw std::invalid_argument("asymptotic_constant: equation is not partition regular (m = 0)");
    double c = 1.0;
    for (int e : eq.exponents())
        if (e >= 2) c *= zeta_value(e);
    for (int j = 2; j <= eq.ones() - 1; ++j) c /= j;
    return {c, eq.ones()};
}

}
