#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/equation.hpp"
#include "ramsey/solutions.hpp"

namespace ramsey {

struct CountQuery {
    EquationSpec eq;
    std::int64_t lo = 2;
    std::int64_t hi = 0;
    const DiscreteColouring* colouring = nullptr;  // must cover [lo, hi] when present
    bool non_degenerate_only = false;
    int jobs = 1;
};

// yields every ordered tuple (x1..xk), all x_i in [lo,hi], y = prod x_i^{a_i} in [lo,hi],
// in lexicographic order on (x1..xk); with a colouring only monochromatic tuples are yielded.
// visitor returns false to stop early.
void enumerate_solutions(const CountQuery& q, const std::function<bool(const MonoSolution&)>& visit);

std::vector<MonoSolution> collect_solutions(const CountQuery& q,
                                            std::size_t limit = static_cast<std::size_t>(-1));

CountReport count_solutions(const CountQuery& q);

// ordered pairs (x, y) with x, y >= lo and x*y <= hi; hyperbola method, O(sqrt hi)
std::uint64_t count_pairs_le(std::uint64_t lo, std::uint64_t hi);

int divisor_count(std::uint64_t n);

double zeta_value(int s);  // s >= 2

struct AsymptoticConstant {
    double value;  // C(a) = zeta(a_{m+1})...zeta(a_k) / (m-1)!
    int m;         // count asymptotic is C(a) * X * (log X)^(m-1)
};
AsymptoticConstant asymptotic_constant(const EquationSpec& eq);

}
