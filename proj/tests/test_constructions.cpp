#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/equation.hpp"
#include "oracles.hpp"

using namespace ramsey;

namespace {

const EquationSpec kProduct = EquationSpec::parse("1,1");

std::uint64_t mono_count(const DiscreteColouring& c) {
    return count_solutions({kProduct, 2, c.hi(), &c}).total;
}

}  // namespace

TEST_CASE("power_boundary_floor is the exact integer threshold") {
    // largest n with n^q * 2^e <= N^p
    CHECK(power_boundary_floor(100, 1, 2, 1) == 7);    // n^2 * 2 <= 100 -> n <= 7
    CHECK(power_boundary_floor(100, 2, 2, 2) == 50);   // n^2 * 4 <= 100^2 -> n <= 50
    CHECK(power_boundary_floor(100, 2, 2, 0) == 100);
    CHECK(power_boundary_floor(32, 1, 5, 0) == 2);     // n^5 <= 32
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(gen() % 1000000);
        int p = 1 + static_cast<int>(gen() % 5);
        int q = p + static_cast<int>(gen() % 10);
        int e = static_cast<int>(gen() % 8);
        std::int64_t b = power_boundary_floor(n, p, q, e);
        BigInt target = ipow(BigInt(n), static_cast<unsigned>(p));
        CHECK(ipow(BigInt(b), static_cast<unsigned>(q)) * ipow(BigInt(2), static_cast<unsigned>(e)) <= target);
        CHECK(ipow(BigInt(b + 1), static_cast<unsigned>(q)) * ipow(BigInt(2), static_cast<unsigned>(e)) > target);
    }
}

TEST_CASE("the named plan table") {
    std::set<std::string> names;
    for (const NamedPlan& p : named_plans()) names.insert(p.name);
    CHECK(names == std::set<std::string>{"prendiville2", "improved2", "prendiville3", "schur3",
                                         "improved3", "fourcolour_a", "fourcolour_b"});
    CHECK(plan_by_name("improved2").r == 2);
    CHECK(plan_by_name("schur3").r == 3);
    CHECK(plan_by_name("improved3").r == 3);
    CHECK(plan_by_name("fourcolour_a").r == 4);
    CHECK(plan_by_name("fourcolour_b").r == 4);
    CHECK_THROWS(plan_by_name("nonesuch"));
}

TEST_CASE("frozen boundaries at concrete N") {
    ResolvedPlan imp2 = resolve_named("improved2", 100);
    CHECK(imp2.bounds == std::vector<std::int64_t>{7, 50, 100});
    CHECK(imp2.colours == std::vector<int>{1, 2, 1});
    CHECK(imp2.colour_of(2) == 1);
    CHECK(imp2.colour_of(7) == 1);
    CHECK(imp2.colour_of(8) == 2);
    CHECK(imp2.colour_of(50) == 2);
    CHECK(imp2.colour_of(51) == 1);
    CHECK(imp2.colour_of(100) == 1);

    ResolvedPlan pren2 = resolve_named("prendiville2", 100);
    CHECK(pren2.bounds == std::vector<std::int64_t>{10, 100});
    CHECK(pren2.colours == std::vector<int>{1, 2});

    ResolvedPlan pren3 = resolve_named("prendiville3", 10000);
    CHECK(pren3.bounds == std::vector<std::int64_t>{10, 100, 10000});  // N^{1/4}, N^{2/4}, N
    CHECK(pren3.colours == std::vector<int>{1, 2, 3});

    ResolvedPlan s3 = resolve_named("schur3", 100000);
    CHECK(s3.bounds == std::vector<std::int64_t>{10, 100, 10000, 100000});
    CHECK(s3.colours == std::vector<int>{1, 2, 3, 2});

    // improved3 boundaries at N = 10^5: x^5 * 2^e <= N^p
    ResolvedPlan i3 = resolve_named("improved3", 100000);
    REQUIRE(i3.bounds.size() == 7);
    CHECK(i3.colours == std::vector<int>{1, 2, 1, 3, 1, 2, 1});
    CHECK(i3.bounds.back() == 100000);
    // each boundary obeys its exact power inequality
    const NamedPlan& plan = plan_by_name("improved3");
    for (std::size_t i = 0; i < plan.boundaries.size(); ++i)
        CHECK(i3.bounds[i] ==
              power_boundary_floor(100000, plan.boundaries[i].p, plan.q, plan.boundaries[i].e));
}

TEST_CASE("plans validate and cover their domain") {
    for (const NamedPlan& p : named_plans()) {
        DiscreteColouring c = build_named(p.name, 1000000);
        CHECK(c.lo() == 2);
        CHECK(c.hi() == 1000000);
        CHECK(c.r() == p.r);
        ResolvedPlan rp = resolve_named(p.name, 1000000);
        for (std::size_t i = 1; i < rp.bounds.size(); ++i) CHECK(rp.bounds[i - 1] < rp.bounds[i]);
        // spot-check the lookup against the materialized array
        std::mt19937_64 gen(11);
        for (int k = 0; k < 1000; ++k) {
            std::int64_t x = 2 + static_cast<std::int64_t>(gen() % 999999);
            CHECK(c.at(x) == rp.colour_of(x));
        }
    }
    CHECK_THROWS(build_named("improved2", 3));  // first interval would be empty
}

TEST_CASE("improved2 monochromatic count equals the prefix count") {
    for (std::int64_t n : {100, 1000, 10000}) {
        DiscreteColouring c = build_named("improved2", n);
        std::int64_t prefix = power_boundary_floor(n, 1, 2, 1);  // (N/2)^{1/2}
        CHECK(mono_count(c) == count_solutions({kProduct, 2, prefix}).total);
        // and every monochromatic witness lies inside [2, prefix]
        bool contained = true;
        enumerate_solutions({kProduct, 2, n, &c}, [&](const MonoSolution& s) {
            for (const BigInt& x : s.xs)
                if (x > prefix) contained = false;
            if (s.y > prefix) contained = false;
            return contained;
        });
        CHECK(contained);
    }
}

TEST_CASE("three- and four-colour plans keep all solutions in the first interval") {
    for (const char* name : {"schur3", "improved3", "fourcolour_a", "fourcolour_b"}) {
        std::int64_t n = 100000;
        DiscreteColouring c = build_named(name, n);
        ResolvedPlan rp = resolve_named(name, n);
        std::int64_t first = rp.bounds.front();
        CAPTURE(name);
        CHECK(mono_count(c) == count_solutions({kProduct, 2, first}).total);
        bool contained = true;
        enumerate_solutions({kProduct, 2, n, &c}, [&](const MonoSolution& s) {
            for (const BigInt& x : s.xs)
                if (x > first) contained = false;
            if (s.y > first) contained = false;
            return contained;
        });
        CHECK(contained);
    }
}

TEST_CASE("the four-colour free palette tolerates any green/red mix") {
    std::int64_t n = 1000000;
    auto [lo, hi] = fourcolour_free_palette(n);
    CHECK(lo == 1001);   // N^{7/14} = 1000
    CHECK(hi == 2682);   // N^{8/14}
    CHECK(lo < hi);
    for (const char* name : {"fourcolour_a", "fourcolour_b"}) {
        DiscreteColouring base = build_named(name, n);
        std::uint64_t want = mono_count(base);
        std::mt19937_64 gen(2024);
        for (int trial = 0; trial < 20; ++trial) {
            DiscreteColouring c = base;
            for (std::int64_t x = lo; x <= hi; ++x) c.set(x, gen() % 2 ? 1 : 3);
            CHECK(mono_count(c) == want);
        }
    }
}

TEST_CASE("lift covers the domain and spares the template colours") {
    RationalIntervalColouring xi;
    xi.r = 2;
    xi.pieces = {RationalPiece{1, 2, true, false, 1}, RationalPiece{2, 4, true, false, 2},
                 RationalPiece{4, 5, true, false, 1}};
    std::int64_t n = 100000;
    std::int64_t m = default_lift_m(n, xi.pieces.back().hi, xi.pieces.back().hi_closed);
    CHECK(ipow(BigInt(m), 5) > n);               // open right endpoint: strict
    CHECK_THROWS(lift({xi, m - 1, n}));          // one lower falls short of N
    DiscreteColouring c = lift({xi, m, n});
    CHECK(c.r() == 3);  // fresh base colour
    for (std::int64_t x = 2; x <= m; ++x) CHECK(c.at(x) == 3);
    // no monochromatic product solution inside the lifted (template) colours
    CountReport rep = count_solutions({kProduct, 2, n, &c});
    for (const auto& [colour, cc] : rep.per_colour)
        if (colour != 3) CHECK(cc.total == 0);
    CHECK_THROWS(lift({xi, 2, n}));  // 2^5 = 32 < 100000: template too short
}

TEST_CASE("lift property holds for random sum-free templates") {
    std::mt19937_64 gen(31337);
    EquationSpec add = EquationSpec::parse("1,1");
    int tested = 0;
    while (tested < 12) {
        // random integer-breakpoint template over [1, L)
        int pieces = 2 + static_cast<int>(gen() % 3);
        RationalIntervalColouring xi;
        xi.r = 2 + static_cast<int>(gen() % 2);
        BigRat lo = 1;
        for (int i = 0; i < pieces; ++i) {
            BigRat hi = lo + 1 + static_cast<int>(gen() % 2);
            xi.pieces.push_back(
                RationalPiece{lo, hi, true, false, static_cast<int>(gen() % xi.r) + 1});
            lo = hi;
        }
        if (!check_sumfree(xi, add)) continue;  // only lift additive-sum-free templates
        ++tested;
        std::int64_t n = 10000 + static_cast<std::int64_t>(gen() % 90000);
        std::int64_t m = default_lift_m(n, xi.pieces.back().hi, xi.pieces.back().hi_closed);
        DiscreteColouring c = lift({xi, m, n});
        CountReport rep = count_solutions({kProduct, 2, n, &c});
        CAPTURE(tested);
        for (const auto& [colour, cc] : rep.per_colour)
            if (colour != xi.r + 1) CHECK(cc.total == 0);
    }
}

TEST_CASE("omega counts prime factors with multiplicity") {
    CHECK(omega_of(1) == 0);
    CHECK(omega_of(2) == 1);
    CHECK(omega_of(12) == 3);
    CHECK(omega_of(31) == 1);
    CHECK(omega_of(32) == 5);
    CHECK(omega_of(97 * 97) == 2);
    CHECK_THROWS(omega_of(0));
}

TEST_CASE("omega lift of the length-4 colouring has no product solutions up to 31") {
    DiscreteColouring xi = parse_colouring("1 4 2\nRBBR\n");
    DiscreteColouring c = build_omega(xi, 31);
    CHECK(c.r() == 2);
    CHECK(c.at(2) == 1);   // omega 1 -> R
    CHECK(c.at(4) == 2);   // omega 2 -> B
    CHECK(c.at(8) == 2);   // omega 3 -> B
    CHECK(c.at(16) == 1);  // omega 4 -> R
    CHECK(c.at(30) == 2);  // 2*3*5 -> omega 3
    CountReport rep = count_solutions({kProduct, 2, 31, &c});
    CHECK(rep.total == 0);
    // at N = 32 the same recipe runs out of template: omega(32) = 5 > 4
    CHECK_THROWS(build_omega(xi, 32));
}

TEST_CASE("every 2-colouring of the five powers of two has a product solution") {
    // P(2) = 32: on {2,4,8,16,32} the product equation collapses to sums of exponents
    std::int64_t pows[5] = {2, 4, 8, 16, 32};
    for (int mask = 0; mask < 32; ++mask) {
        auto colour = [&](std::int64_t v) {
            for (int i = 0; i < 5; ++i)
                if (pows[i] == v) return (mask >> i) & 1;
            return -1;
        };
        bool found = false;
        for (int i = 0; i < 5 && !found; ++i)
            for (int j = i; j < 5 && !found; ++j) {
                std::int64_t z = pows[i] * pows[j];
                if (z > 32) continue;
                if (colour(pows[i]) == colour(pows[j]) && colour(pows[j]) == colour(z))
                    found = true;
            }
        CAPTURE(mask);
        CHECK(found);
    }
}

TEST_CASE("rado real construction shape") {
    RationalIntervalColouring c12 = build_rado2_real(EquationSpec::parse("1,2"));
    REQUIRE(c12.pieces.size() == 3);
    CHECK(c12.pieces[0].lo == 1);
    CHECK(c12.pieces[0].hi == 3);
    CHECK(c12.pieces[1].hi == 9);
    CHECK(c12.pieces[2].hi == 11);
    CHECK(c12.pieces[0].colour == 1);
    CHECK(c12.pieces[1].colour == 2);
    CHECK(c12.pieces[2].colour == 1);
}
