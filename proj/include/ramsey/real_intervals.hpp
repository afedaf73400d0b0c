#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/bigint.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/equation.hpp"

namespace ramsey {

struct RationalPiece {
    BigRat lo, hi;
    bool lo_closed = false;
    bool hi_closed = true;
    int colour = 1;
};

// contiguous run of rational-endpoint pieces partitioning a real interval
struct RationalIntervalColouring {
    std::vector<RationalPiece> pieces;
    int r = 1;
};

// throws invalid_argument on gaps, overlaps, empty pieces, bad colours
void validate_interval_colouring(const RationalIntervalColouring& col);

struct RealWitness {
    std::vector<BigRat> xs;
    BigRat y;
    int colour = 0;
};

// same-coloured points x1..xk, y in the domain with a1*x1 + ... + ak*xk = y;
// exact rational decision via weighted Minkowski sums over piece tuples.
// deterministic: colours ascending, piece tuples in lexicographic index order.
std::optional<RealWitness> find_additive_witness(const RationalIntervalColouring& col,
                                                 const EquationSpec& eq);
bool check_sumfree(const RationalIntervalColouring& col, const EquationSpec& eq);

// true iff the point lies in the piece (closedness-aware); for tests and re-verification
bool piece_contains(const RationalPiece& p, const BigRat& x);
int interval_colour_at(const RationalIntervalColouring& col, const BigRat& x);  // 0 if outside

// [k, k+1) pieces over [lo, hi+1), colour xi(k)
RationalIntervalColouring floor_extend(const DiscreteColouring& xi);
// (k, k+1] pieces over (lo, hi+1], colour xi(k)
RationalIntervalColouring ceil_extend(const DiscreteColouring& xi);

struct IntervalCertificate {
    BigRat T;  // right endpoint of the certified domain
    int r = 0;
    EquationSpec eq;
    RationalIntervalColouring colouring;
    bool verified = false;
    std::optional<RealWitness> witness;  // populated when verification fails
};

// domain must start at 1; on success the record claims I_eq(r) >= T
IntervalCertificate certify_interval_lower_bound(const RationalIntervalColouring& col,
                                                 const EquationSpec& eq);

std::string rational_to_string(const BigRat& q);      // "p/q" or "p"
BigRat rational_from_string(const std::string& text);

// pieces serialize as [{"lo":"1","hi":"2","lo_closed":false,"hi_closed":true,"colour":1},...];
// closedness flags are optional on input and default to the (lo, hi] convention
nlohmann::json interval_colouring_to_json(const RationalIntervalColouring& col);
RationalIntervalColouring interval_colouring_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const IntervalCertificate& cert);
// parse a certificate record and recheck its colouring from scratch
IntervalCertificate reverify_certificate(const nlohmann::json& j);

}
