#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <json.hpp>

#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/equation.hpp"
#include "ramsey/json_report.hpp"
#include "ramsey/real_intervals.hpp"

using namespace ramsey;

namespace {

RationalPiece piece(BigRat lo, BigRat hi, bool lc, bool hc, int colour) {
    return RationalPiece{lo, hi, lc, hc, colour};
}

// integer-breakpoint colouring of [1, cuts.back()] with left-closed pieces
RationalIntervalColouring step_colouring(const std::vector<std::int64_t>& cuts,
                                         const std::vector<int>& colours) {
    RationalIntervalColouring col;
    col.r = 1;
    BigRat lo = 1;
    for (std::size_t i = 0; i < colours.size(); ++i) {
        col.pieces.push_back(piece(lo, BigRat(cuts[i]), true, false, colours[i]));
        col.r = std::max(col.r, colours[i]);
        lo = BigRat(cuts[i]);
    }
    return col;
}

// brute force on the grid of rationals with denominator 12: is there a monochromatic
// x1 + x2 = y with all three inside coloured pieces?
bool grid_has_solution(const RationalIntervalColouring& col) {
    BigRat lo = col.pieces.front().lo;
    BigRat hi = col.pieces.back().hi;
    std::int64_t lo12 =
        boost::multiprecision::numerator(BigRat(lo * 12)).convert_to<std::int64_t>();
    std::int64_t hi12 =
        boost::multiprecision::numerator(BigRat(hi * 12)).convert_to<std::int64_t>();
    auto colour_at = [&](std::int64_t t) { return interval_colour_at(col, BigRat(t, 12)); };
    for (std::int64_t x = lo12; x <= hi12; ++x) {
        int cx = colour_at(x);
        if (cx == 0) continue;
        for (std::int64_t y = x; y <= hi12; ++y) {
            if (colour_at(y) != cx) continue;
            std::int64_t z = x + y;
            if (z > hi12) break;
            if (colour_at(z) == cx) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("validation accepts contiguous pieces and rejects gaps and overlaps") {
    RationalIntervalColouring good;
    good.r = 2;
    good.pieces = {piece(1, 2, true, false, 1), piece(2, 4, true, false, 2),
                   piece(4, 5, true, false, 1)};
    CHECK_NOTHROW(validate_interval_colouring(good));

    RationalIntervalColouring gap = good;
    gap.pieces[1].lo = BigRat(5, 2);
    CHECK_THROWS(validate_interval_colouring(gap));

    RationalIntervalColouring doubled = good;  // both endpoints closed at the seam
    doubled.pieces[0].hi_closed = true;
    CHECK_THROWS(validate_interval_colouring(doubled));

    RationalIntervalColouring open_seam = good;  // neither side owns the seam point
    open_seam.pieces[1].lo_closed = false;
    CHECK_THROWS(validate_interval_colouring(open_seam));

    RationalIntervalColouring empty_piece = good;
    empty_piece.pieces[0].hi = 1;
    empty_piece.pieces[0].lo_closed = false;  // (1,1) is empty
    CHECK_THROWS(validate_interval_colouring(empty_piece));

    RationalIntervalColouring bad_colour = good;
    bad_colour.pieces[2].colour = 3;  // r says 2
    CHECK_THROWS(validate_interval_colouring(bad_colour));
}

TEST_CASE("interval_colour_at respects closedness") {
    RationalIntervalColouring col;
    col.r = 2;
    col.pieces = {piece(1, 2, false, true, 1), piece(2, 3, false, true, 2)};
    CHECK(interval_colour_at(col, BigRat(1)) == 0);  // left end open
    CHECK(interval_colour_at(col, BigRat(3, 2)) == 1);
    CHECK(interval_colour_at(col, BigRat(2)) == 1);  // seam belongs to the left piece
    CHECK(interval_colour_at(col, BigRat(5, 2)) == 2);
    CHECK(interval_colour_at(col, BigRat(3)) == 2);
    CHECK(interval_colour_at(col, BigRat(7, 2)) == 0);  // outside
}

TEST_CASE("the two-colour sum-free template over [1,5)") {
    RationalIntervalColouring col = step_colouring({2, 4, 5}, {1, 2, 1});
    EquationSpec eq = EquationSpec::parse("1,1");
    CHECK(check_sumfree(col, eq));
    CHECK(!find_additive_witness(col, eq).has_value());
    // stretching the middle piece to [2,4.5) creates 4.25 + something? no:
    // making the last red piece reach 8 lets 2+2=4..? craft a failing variant:
    RationalIntervalColouring bad = col;
    bad.pieces[2].hi = 9;  // red [4,9): 4+4=8 is red+red=red
    auto wit = find_additive_witness(bad, eq);
    REQUIRE(wit.has_value());
    CHECK(wit->colour == 1);
    BigRat sum = 0;
    for (const BigRat& x : wit->xs) {
        sum += x;
        CHECK(interval_colour_at(bad, x) == wit->colour);
    }
    CHECK(sum == wit->y);
    CHECK(interval_colour_at(bad, wit->y) == wit->colour);
}

TEST_CASE("witness descent works for weighted equations") {
    // x1 + 2*x2 = y over a colouring where colour 1 covers everything: witness must exist
    RationalIntervalColouring col;
    col.r = 1;
    col.pieces = {piece(1, 10, true, true, 1)};
    EquationSpec eq = EquationSpec::parse("1,2");
    auto wit = find_additive_witness(col, eq);
    REQUIRE(wit.has_value());
    REQUIRE(wit->xs.size() == 2);
    CHECK(wit->xs[0] + 2 * wit->xs[1] == wit->y);
}

TEST_CASE("rado real templates certify their claimed intervals") {
    for (const char* spec : {"1,1", "1,2", "1,1,1", "1,3"}) {
        EquationSpec eq = EquationSpec::parse(spec);
        RationalIntervalColouring col = build_rado2_real(eq);
        std::int64_t A = eq.exponent_sum();
        CHECK(col.pieces.back().hi == BigRat(A * A + A - 1));
        CHECK(check_sumfree(col, eq));
        IntervalCertificate cert = certify_interval_lower_bound(col, eq);
        CHECK(cert.verified);
        CHECK(cert.T == BigRat(A * A + A - 1));
        // the record survives a JSON round trip and re-verification
        nlohmann::json j = certificate_to_json(cert);
        IntervalCertificate again = reverify_certificate(j);
        CHECK(again.verified);
        CHECK(again.T == cert.T);
    }
    CHECK_THROWS(build_rado2_real(EquationSpec::parse("2,2")));  // needs a unit coefficient
}

TEST_CASE("floor extension equals the discrete double-system check") {
    // floor_extend(xi) is sum-free for x+y=z over the reals iff xi avoids both
    // x+y=z and x+y+1=z; exhaust all 2-colourings of [1..6]
    EquationSpec eq = EquationSpec::parse("1,1");
    for (int mask = 0; mask < 64; ++mask) {
        DiscreteColouring xi(1, 6, 2);
        for (int i = 0; i < 6; ++i) xi.set(i + 1, ((mask >> i) & 1) + 1);
        bool discrete_free = true;
        for (int x = 1; x <= 6 && discrete_free; ++x)
            for (int y = x; y <= 6 && discrete_free; ++y) {
                if (x + y <= 6 && xi.at(x) == xi.at(y) && xi.at(y) == xi.at(x + y))
                    discrete_free = false;
                if (x + y + 1 <= 6 && xi.at(x) == xi.at(y) && xi.at(y) == xi.at(x + y + 1))
                    discrete_free = false;
            }
        RationalIntervalColouring real = floor_extend(xi);
        CAPTURE(mask);
        CHECK(check_sumfree(real, eq) == discrete_free);
    }
}

TEST_CASE("floor extension of the length-4 two-colouring") {
    DiscreteColouring xi = parse_colouring("1 4 2\nRBBR\n");
    RationalIntervalColouring real = floor_extend(xi);
    REQUIRE(real.pieces.size() == 4);
    CHECK(real.pieces.front().lo == 1);
    CHECK(real.pieces.front().lo_closed);
    CHECK(real.pieces.back().hi == 5);
    CHECK(!real.pieces.back().hi_closed);
    CHECK(real.pieces[0].colour == 1);
    CHECK(real.pieces[1].colour == 2);
    CHECK(real.pieces[2].colour == 2);
    CHECK(real.pieces[3].colour == 1);
    CHECK(check_sumfree(real, EquationSpec::parse("1,1")));
    IntervalCertificate cert = certify_interval_lower_bound(real, EquationSpec::parse("1,1"));
    CHECK(cert.verified);
    CHECK(cert.T == 5);
}

TEST_CASE("ceil extension shifts ownership to the right endpoints") {
    DiscreteColouring xi = parse_colouring("1 3 2\nRBR\n");
    RationalIntervalColouring real = ceil_extend(xi);
    REQUIRE(real.pieces.size() == 3);
    CHECK(!real.pieces.front().lo_closed);  // (1, 2]
    CHECK(real.pieces.front().hi_closed);
    CHECK(interval_colour_at(real, BigRat(1)) == 0);
    CHECK(interval_colour_at(real, BigRat(2)) == 1);
    CHECK(interval_colour_at(real, BigRat(5, 2)) == 2);
    CHECK(interval_colour_at(real, BigRat(4)) == 1);  // (3,4] takes xi(3) = R
}

TEST_CASE("dense grid oracle agrees on random integer-breakpoint colourings") {
    std::mt19937_64 gen(424242);
    EquationSpec eq = EquationSpec::parse("1,1");
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int pieces = 2 + static_cast<int>(gen() % 4);
        std::vector<std::int64_t> cuts;
        std::int64_t cur = 1;
        for (int i = 0; i < pieces; ++i) {
            cur += 1 + static_cast<std::int64_t>(gen() % 2);
            cuts.push_back(cur);
        }
        std::vector<int> colours;
        int r = 2 + static_cast<int>(gen() % 2);
        for (int i = 0; i < pieces; ++i) colours.push_back(static_cast<int>(gen() % r) + 1);
        RationalIntervalColouring col = step_colouring(cuts, colours);
        col.r = r;
        bool engine_free = check_sumfree(col, eq);
        bool grid_found = grid_has_solution(col);
        CAPTURE(trial);
        CHECK(engine_free == !grid_found);
        if (grid_found) ++found;
    }
    CHECK(found > 20);  // the sample exercises both outcomes
    CHECK(found < 180);
}

TEST_CASE("json round trip for interval colourings") {
    RationalIntervalColouring col = step_colouring({3, 7, 11}, {1, 2, 1});
    col.pieces[1].lo = BigRat(3);
    nlohmann::json j = interval_colouring_to_json(col);
    RationalIntervalColouring back = interval_colouring_from_json(j);
    REQUIRE(back.pieces.size() == col.pieces.size());
    for (std::size_t i = 0; i < col.pieces.size(); ++i) {
        CHECK(back.pieces[i].lo == col.pieces[i].lo);
        CHECK(back.pieces[i].hi == col.pieces[i].hi);
        CHECK(back.pieces[i].lo_closed == col.pieces[i].lo_closed);
        CHECK(back.pieces[i].hi_closed == col.pieces[i].hi_closed);
        CHECK(back.pieces[i].colour == col.pieces[i].colour);
    }
    CHECK(back.r == col.r);
}

TEST_CASE("rational string forms") {
    CHECK(rational_to_string(BigRat(5)) == "5");
    CHECK(rational_to_string(BigRat(7, 2)) == "7/2");
    CHECK(rational_from_string("7/2") == BigRat(7, 2));
    CHECK(rational_from_string("41") == BigRat(41));
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("certify requires the domain to start at 1") {
    RationalIntervalColouring col;
    col.r = 1;
    col.pieces = {piece(2, 3, true, false, 1)};
    CHECK_THROWS(certify_interval_lower_bound(col, EquationSpec::parse("1,1")));
}

TEST_CASE("a failed certificate carries its witness") {
    RationalIntervalColouring col;
    col.r = 1;
    col.pieces = {piece(1, 10, true, false, 1)};
    IntervalCertificate cert = certify_interval_lower_bound(col, EquationSpec::parse("1,1"));
    CHECK(!cert.verified);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->xs[0] + cert.witness->xs[1] == cert.witness->y);
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j.contains("witness"));
    CHECK(!reverify_certificate(j).verified);
}
