#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bigint.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/equation.hpp"
#include "ramsey/real_intervals.hpp"

namespace ramsey {

// one interval boundary at N^{p/q} / 2^{e/q}; n is below it iff n^q * 2^e <= N^p
struct PowerBoundary {
    int p;
    int e;
    int colour;  // colour of the interval ending at this boundary
};

// an interval colouring of [2, N] given by boundaries over a common root q
struct NamedPlan {
    std::string name;
    int r;
    int q;
    std::vector<PowerBoundary> boundaries;  // ascending; the last is N itself (p == q, e == 0)
};

const std::vector<NamedPlan>& named_plans();
const NamedPlan& plan_by_name(const std::string& name);

// largest n >= 0 with n^q * 2^e <= N^p, by exact big-integer root
std::int64_t power_boundary_floor(std::int64_t n, int p, int q, int e);

// plan evaluated at a concrete N; colour lookup without materializing the array
struct ResolvedPlan {
    std::int64_t n = 0;
    int r = 0;
    std::vector<std::int64_t> bounds;
    std::vector<int> colours;
    int colour_of(std::int64_t x) const;  // x in [2, n]
};

ResolvedPlan resolve_named(const std::string& name, std::int64_t n);
DiscreteColouring build_named(const std::string& name, std::int64_t n);

// the stretch of fourcolour_a/b that tolerates any green/red mix: (N^{7/14}, N^{8/14}]
std::pair<std::int64_t, std::int64_t> fourcolour_free_palette(std::int64_t n);

struct LiftSpec {
    RationalIntervalColouring xi;  // template over (1, T]
    std::int64_t m = 0;            // logarithm base, >= 2
    std::int64_t n = 0;
};

// least M >= 2 whose lifted template reaches N: M^T >= N, strictly when the
// template is open at T; lift itself still rejects a spec that falls short
std::int64_t default_lift_m(std::int64_t n, const BigRat& t, bool t_closed = true);

// colouring of [2, N]: the fresh colour r on [2, M], and xi(log x / log M) above,
// membership decided by exact power comparisons  M^p < x^q  and  x^q' <= M^p'
DiscreteColouring lift(const LiftSpec& spec);

int omega_of(std::int64_t x);  // number of prime factors with multiplicity
// c(x) = xi(Omega(x)) on [2, N]; xi must cover [1, floor(log2 N)]
DiscreteColouring build_omega(const DiscreteColouring& xi, std::int64_t n);

// 2-colouring [1, A) u [A^2, A^2+A-1) vs [A, A^2) with A = sum of exponents; needs a_1 = 1
RationalIntervalColouring build_rado2_real(const EquationSpec& eq);

}
