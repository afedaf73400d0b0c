#include "ramsey/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ramsey {

namespace {
constexpr int R = 1, B = 2, G = 3, P = 4;
}

const std::vector<NamedPlan>& named_plans() {
    static const std::vector<NamedPlan> plans = {
        {"prendiville2", 2, 2, {{1, 0, R}, {2, 0, B}}},
        {"improved2", 2, 2, {{1, 1, R}, {2, 2, B}, {2, 0, R}}},
        {"prendiville3", 3, 4, {{1, 0, R}, {2, 0, B}, {4, 0, G}}},
        {"schur3", 3, 5, {{1, 0, R}, {2, 0, B}, {4, 0, G}, {5, 0, B}}},
        {"improved3",
         3,
         5,
         {{1, 4, R}, {2, 8, B}, {2, 3, R}, {4, 6, G}, {4, 1, R}, {5, 5, B}, {5, 0, R}}},
        {"fourcolour_a",
         4,
         14,
         {{1, 0, P}, {2, 0, R}, {4, 0, B}, {5, 0, R}, {10, 0, G}, {11, 0, R}, {13, 0, B}, {14, 0, R}}},
        {"fourcolour_b",
         4,
         14,
         {{1, 0, P},
          {2, 0, R},
          {4, 0, B},
          {5, 0, R},
          {7, 0, G},
          {8, 0, R},
          {10, 0, G},
          {11, 0, R},
          {13, 0, B},
          {14, 0, R}}},
    };
    return plans;
}

const NamedPlan& plan_by_name(const std::string& name) {
    for (const NamedPlan& p : named_plans())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown construction '" + name + "'");
}

std::int64_t power_boundary_floor(std::int64_t n, int p, int q, int e) {
    if (n < 1 || p < 1 || q < 1 || e < 0) throw std::invalid_argument("bad power boundary");
    BigInt target = ipow(BigInt(n), static_cast<std::uint64_t>(p)) >> e;
    return integer_kth_root(target, static_cast<unsigned>(q)).convert_to<std::int64_t>();
}

int ResolvedPlan::colour_of(std::int64_t x) const {
    if (x < 2 || x > n) throw std::out_of_range("element outside [2, N]");
    std::size_t i = std::lower_bound(bounds.begin(), bounds.end(), x) - bounds.begin();
    return colours[i];
}

ResolvedPlan resolve_named(const std::string& name, std::int64_t n) {
    const NamedPlan& plan = plan_by_name(name);
    ResolvedPlan out;
    out.n = n;
    out.r = plan.r;
    for (const PowerBoundary& pb : plan.boundaries) {
        out.bounds.push_back(power_boundary_floor(n, pb.p, plan.q, pb.e));
        out.colours.push_back(pb.colour);
    }
    if (out.bounds.front() < 2)
        throw std::invalid_argument("construction '" + name + "': N too small, first interval empty");
    for (std::size_t i = 1; i < out.bounds.size(); ++i)
        if (out.bounds[i] <= out.bounds[i - 1])
            throw std::invalid_argument("construction '" + name + "': N too small, interval " +
                                        std::to_string(i) + " empty");
    assert(out.bounds.back() == n);
    return out;
}

DiscreteColouring build_named(const std::string& name, std::int64_t n) {
    ResolvedPlan plan = resolve_named(name, n);
    DiscreteColouring c(2, n, plan.r);
    std::int64_t x = 2;
    for (std::size_t i = 0; i < plan.bounds.size(); ++i)
        for (; x <= plan.bounds[i]; ++x) c.set(x, plan.colours[i]);
    return c;
}

// the stretch where the two real templates disagree, lifted with the same
// unshifted boundaries the plans use; a shifted lower end (N/2)^{7/14} would
// admit red pairs whose product lands back inside [2, N]
std::pair<std::int64_t, std::int64_t> fourcolour_free_palette(std::int64_t n) {
    return {power_boundary_floor(n, 7, 14, 0) + 1, power_boundary_floor(n, 8, 14, 0)};
}

// least M >= 2 so the lifted template reaches N; an open right endpoint needs
// M^T strictly above N
std::int64_t default_lift_m(std::int64_t n, const BigRat& t, bool t_closed) {
    BigInt num = boost::multiprecision::numerator(t);
    BigInt den = boost::multiprecision::denominator(t);
    if (num <= 0 || n < 2) throw std::invalid_argument("default lift threshold needs T > 0, N >= 2");
    BigInt target = ipow(BigInt(n), den.convert_to<std::uint64_t>());
    BigInt root = integer_kth_root(target, num.convert_to<unsigned>());
    BigInt power = ipow(root, num.convert_to<std::uint64_t>());
    if (power < target || (!t_closed && power == target)) ++root;
    std::int64_t m = root.convert_to<std::int64_t>();
    return m < 2 ? 2 : m;
}

namespace {

// largest x with x^q <= M^p (closed) or x^q < M^p (open)
std::int64_t piece_end_in_x(std::int64_t m, const BigRat& endpoint, bool closed) {
    BigInt p = boost::multiprecision::numerator(endpoint);
    BigInt q = boost::multiprecision::denominator(endpoint);
    if (p <= 0 || p > 1000000 || q > 1000000)
        throw std::invalid_argument("lift template endpoint out of range: " +
                                    rational_to_string(endpoint));
    BigInt mp = ipow(BigInt(m), p.convert_to<std::uint64_t>());
    BigInt root = integer_kth_root(mp, q.convert_to<unsigned>());
    if (!closed && ipow(root, q.convert_to<std::uint64_t>()) == mp) --root;
    return root.convert_to<std::int64_t>();
}

}  // namespace

DiscreteColouring lift(const LiftSpec& spec) {
    validate_interval_colouring(spec.xi);
    if (spec.m < 2) throw std::invalid_argument("lift threshold M must be >= 2");
    if (spec.n < 2) throw std::invalid_argument("lift domain end N must be >= 2");
    if (spec.xi.pieces.front().lo != 1)
        throw std::invalid_argument("lift template must start at 1");

    const RationalPiece& last = spec.xi.pieces.back();
    std::int64_t covered = piece_end_in_x(spec.m, last.hi, last.hi_closed);
    if (covered < spec.n)
        throw std::invalid_argument("lift template too short: M^T < N (covers only up to " +
                                    std::to_string(covered) + ")");

    int out_r = spec.xi.r + 1;
    DiscreteColouring c(2, spec.n, out_r, out_r);  // base interval [2, M] keeps the fresh colour
    std::int64_t x = std::min(spec.m, spec.n) + 1;
    for (const RationalPiece& piece : spec.xi.pieces) {
        std::int64_t end = std::min(piece_end_in_x(spec.m, piece.hi, piece.hi_closed), spec.n);
        for (; x <= end; ++x) c.set(x, piece.colour);
        if (x > spec.n) break;
    }
    return c;
}

int omega_of(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("omega_of needs x >= 1");
    int count = 0;
    for (std::int64_t p = 2; p * p <= x; ++p)
        while (x % p == 0) {
            x /= p;
            ++count;
        }
    if (x > 1) ++count;
    return count;
}

DiscreteColouring build_omega(const DiscreteColouring& xi, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("build_omega needs N >= 2");
    int max_omega = 0;
    for (std::int64_t v = n; v > 1; v /= 2) ++max_omega;  // Omega(x) <= log2(x), tight at powers of 2
    if (xi.lo() > 1 || xi.hi() < max_omega)
        throw std::invalid_argument("build_omega: some x <= N has Omega(x) outside the template; need domain [1, " +
                                    std::to_string(max_omega) + "]");
    DiscreteColouring c(2, n, xi.r());
    for (std::int64_t x = 2; x <= n; ++x) c.set(x, xi.at(omega_of(x)));
    return c;
}

RationalIntervalColouring build_rado2_real(const EquationSpec& eq) {
    if (eq.exponents().front() != 1)
        throw std::invalid_argument("construction needs a unit coefficient (a1 = 1)");
    BigRat a(eq.exponent_sum());
    RationalIntervalColouring col;
    col.r = 2;
    col.pieces.push_back({BigRat(1), a, true, false, 1});
    col.pieces.push_back({a, a * a, true, false, 2});
    col.pieces.push_back({a * a, a * a + a - 1, true, false, 1});
    return col;
}

}
