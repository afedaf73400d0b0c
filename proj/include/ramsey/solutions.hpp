#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ramsey/bigint.hpp"

namespace ramsey {

// witness tuple for x1^a1 * ... * xk^ak = y.
// degenerate <=> xs[i] == xs[j] for some i != j (y is never compared)
struct MonoSolution {
    std::vector<BigInt> xs;
    BigInt y;
    int colour = 0;  // 0 when counted without a colouring
    bool degenerate = false;
};

struct ColourCount {
    std::uint64_t total = 0;
    std::uint64_t non_degenerate = 0;
};

struct CountReport {
    std::uint64_t total = 0;
    std::uint64_t non_degenerate = 0;
    std::map<int, ColourCount> per_colour;  // only populated when counting against a colouring
};

}
