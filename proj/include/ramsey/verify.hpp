#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/bigint.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/equation.hpp"
#include "ramsey/solutions.hpp"

namespace ramsey {

// T(a,l,k) = {l, k, lk, a, la, ka, lka, l^2 a, l^2 k a}; every 2-colouring with
// c(l) != c(k) must contain a monochromatic x*y = z with a | z
struct Lemma31Report {
    std::int64_t a = 0, l = 0, k = 0;
    bool premise_possible = false;  // l != k, so a colouring with c(l) != c(k) exists
    bool side_conditions = false;   // a not in {l,k,lk}, k not in {la, l^2 a}, l != ka
    std::uint64_t colourings_checked = 0;
    bool holds = false;
    bool holds_nondegenerate = false;  // meaningful when side_conditions
    bool passed = false;
};
Lemma31Report verify_lemma31(std::int64_t a, std::int64_t l, std::int64_t k);

// grid {(2^j b)^i : 1 <= i <= S, 1 <= j <= W} plus the side row {2^j : 1 <= j <= W};
// disjoint union for odd b (the power of 2 and the power of b identify (i, j))
struct PatternM {
    std::int64_t b = 3;
    int s = 1;
    int w = 1;
};

struct PatternMColouring {
    PatternM pat;
    int r = 2;
    std::vector<int> grid;    // colour of (2^j b)^i at (j-1)*s + (i-1)
    std::vector<int> mprime;  // colour of 2^j at j-1

    int at(int i, int j) const {
        return grid[static_cast<std::size_t>(j - 1) * pat.s + (i - 1)];
    }
    int prime_at(int j) const { return mprime[static_cast<std::size_t>(j) - 1]; }
};

PatternMColouring random_pattern_colouring(const PatternM& pat, int r, std::uint64_t seed);

// colour of an arbitrary integer that happens to be a pattern element; 0 if outside
int pattern_element_colour(const PatternMColouring& col, const BigInt& value);

struct PatternWitness {
    MonoSolution sol;
    int case_used = 0;            // 1: repeated-colour column; 2: rainbow column
    int j0 = 0, d = 0, run = 0;   // equal-column arithmetic progression j0, j0+d, ...
    std::vector<int> is;          // case 1: row indices of the additive solution
    int t = 0;                    //        its target row
    std::vector<int> hs;          //        degeneracy-breaking shifts
    std::vector<std::int64_t> us;  // case 2: x_s = 2^{d*us[s]} for s >= 2
    std::int64_t v = 0;            //        sum a_s us[s] = A*v
    int i = 0;                     //        grid row used for x1 and y
};

// proof procedure for xy = z: equal-column AP scan, then the two-case completion
std::optional<PatternWitness> find_in_pattern_M(const PatternMColouring& col);
// the generalized procedure for x1^a1 ... xk^ak = y (needs a unit exponent)
std::optional<PatternWitness> find_in_pattern_M_general(const EquationSpec& eq,
                                                        const PatternMColouring& col);

// re-derives everything from the witness values alone: product identity, pattern
// membership, colour equality, pairwise-distinct xs, b | y
bool verify_pattern_witness(const EquationSpec& eq, const PatternMColouring& col,
                            const PatternWitness& wit, std::string* why = nullptr);

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MinimizeReport {
    EquationSpec eq;
    int r = 0;
    std::int64_t n = 0;
    std::uint64_t minimum = 0;
    DiscreteColouring witness;
    std::uint64_t nodes = 0;
    std::size_t participating = 0;  // elements occurring in at least one solution
};

// exact min of the monochromatic solution count over r-colourings of [2, n];
// branch and bound over participating elements in decreasing solution-degree order
MinimizeReport minimize(const EquationSpec& eq, int r, std::int64_t n, std::size_t budget = 64);

struct StabilityReport {
    std::int64_t n = 0;
    std::uint64_t mono_count = 0;
    std::int64_t prefix_end = 0;  // floor(N / 16M)
    bool applicable = false;      // mono_count >= 1
    bool vacuous = false;         // prefix_end < 3
    bool prefix_monochromatic = false;
    bool passed = false;
};

// M monochromatic xy=z solutions force [2, floor(N/16M)] monochromatic
StabilityReport stability_check(const DiscreteColouring& c);

}
