#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/equation.hpp"

namespace ramsey {

enum class AdditiveKind { schur, schur_star, rado, rado_star };

// schur: x+y=z; schur_star: x+y=z or x+y+1=z; rado: a1*x1+...+ak*xk=y (coefficients from eq);
// rado_star additionally forbids sum+1=y
struct AdditiveSystem {
    AdditiveKind kind = AdditiveKind::schur;
    std::optional<EquationSpec> eq;
};

AdditiveSystem make_additive_system(const std::string& kind_name,
                                    const std::optional<EquationSpec>& eq);
std::string additive_kind_name(AdditiveKind kind);

struct LimitExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfScopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchReport {
    std::int64_t threshold = 0;  // least N where every r-colouring of [N] has a mono solution
    int r = 0;
    std::uint64_t extremal_count = 0;      // canonical colourings of [threshold-1]
    std::uint64_t raw_extremal_count = 0;  // including colour relabellings
    std::vector<DiscreteColouring> extremals;
    std::uint64_t nodes_visited = 0;
    double wall_ms = 0.0;
};

// depth-first with colour symmetry broken (new colours introduced in order);
// throws LimitExceededError when a valid colouring of [limit] exists
SearchReport find_threshold(const AdditiveSystem& sys, int r, std::int64_t limit,
                            bool want_extremals = false, int jobs = 1);

// every solution-free colouring of [1, n], canonical up to colour permutation, lex sorted
std::vector<DiscreteColouring> enumerate_extremals(const AdditiveSystem& sys, int r,
                                                   std::int64_t n, int jobs = 1);

// sorted distinct supports of solutions whose largest element is n (n included)
std::vector<std::vector<std::int64_t>> solution_supports_at(const AdditiveSystem& sys,
                                                            std::int64_t n);

// direct re-check by full enumeration of the system's solutions, independent of the searcher
bool colouring_is_valid(const AdditiveSystem& sys, const DiscreteColouring& c);

// number of injections of u used colours into r labels: r * (r-1) * ... * (r-u+1)
std::uint64_t colour_relabellings(int r, int used);

struct Template5Report {
    bool all_match = false;
    std::size_t checked = 0;
    std::size_t first_mismatch = 0;  // meaningful only when !all_match
    std::uint64_t cardinality = 0;   // the template's own instance count (2*2*2^4*3^2)
};
// template RBBRGGxGGRBBR PPyPPzwstPPuPP RBBRGGvGGRBBR over [1,40], 4 colours,
// x,v in {R,G}; y,z,t,u in {R,P}; w,s in {B,G,P}; matching is up to colour permutation
Template5Report check_template_5(const std::vector<DiscreteColouring>& cols);

struct AbbottHansonCheck {
    int r = 0, t = 0;
    std::int64_t s_r = 0, s_star_t = 0, s_star_rt = 0;
    std::int64_t rhs = 0;  // 2*S(r)*S*(t) - S(r) - S*(t) + 1
    bool pass = false;
    bool tight = false;
};
std::vector<AbbottHansonCheck> check_abbott_hanson(
    const std::map<int, std::int64_t>& schur_values,
    const std::map<int, std::int64_t>& schur_star_values,
    const std::vector<std::pair<int, int>>& pairs);

// DIMACS CNF with variables v(x,c) = (x-1)*r + c; returns the clause count
std::uint64_t export_cnf(const AdditiveSystem& sys, int r, std::int64_t n,
                         const std::string& path);

}
