#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ruled/moduli.hpp"
#include "ruled/ulrich.hpp"

using namespace ruled;

TEST_CASE("theta target space") {
    const ThetaTarget even = theta_target(5, 2, 2);
    CHECK(even.r1 == 1);
    CHECK(even.degree == 3);  // Pic^{g-2}
    CHECK(even.is_picard);

    const ThetaTarget coprime = theta_target(3, 2, 1);
    CHECK(coprime.r1 == 2);
    CHECK(coprime.degree == 3);  // U(2, 2(g-1)-1)
    CHECK_FALSE(coprime.is_picard);

    const ThetaTarget trivial = theta_target(4, 1, 0);
    CHECK(trivial.r1 == 1);
    CHECK(trivial.degree == 3);  // Pic^{g-1}
    CHECK(trivial.is_picard);

    const ThetaTarget negative = theta_target(2, 2, -2);
    CHECK(negative.r1 == 1);
    CHECK(negative.degree == 2);

    CHECK_THROWS_AS(theta_target(2, 0, 1), std::invalid_argument);
}

TEST_CASE("rank-2 tensor bookkeeping shifts the target degree") {
    for (long long g = 2; g <= 5; ++g)
        for (long long d = -10; d <= 10; d += 2)
            for (long long dp = -3; dp <= 3; ++dp)
                CHECK(theta_target(g, 2, d + 2 * dp).degree ==
                      theta_target(g, 2, d).degree - dp);
}

TEST_CASE("symmetric power invariants") {
    const SymPowerInvariants two = sym_power_invariants(RuledSurface{3, -2}, 2);
    CHECK(two.rank == 2);
    CHECK(two.degree == 2);
    CHECK(two.twist_integral);
    CHECK(two.twist_degree == Rat(1));  // g - 2

    const SymPowerInvariants three = sym_power_invariants(RuledSurface{2, -1}, 3);
    CHECK(three.rank == 3);
    CHECK(three.degree == 3);
    CHECK(three.twist_integral);

    const SymPowerInvariants one = sym_power_invariants(RuledSurface{4, -3}, 1);
    CHECK(one.rank == 1);
    CHECK(one.degree == 0);
    CHECK(one.twist_degree == Rat(3));  // g - 1

    const SymPowerInvariants blocked = sym_power_invariants(RuledSurface{2, -1}, 2);
    CHECK_FALSE(blocked.twist_integral);
    CHECK(blocked.twist_degree == Rat(1, 2));

    CHECK_THROWS_AS(sym_power_invariants(RuledSurface{2, 0}, 0), std::invalid_argument);
}

TEST_CASE("twist slope is always g - 1") {
    for (long long g = 0; g <= 6; ++g)
        for (long long e = -g; e <= 6; ++e)
            for (long long a = 1; a <= 6; ++a)
                CHECK(sym_power_invariants(RuledSurface{g, e}, a).slope_of_twist ==
                      Rat(g - 1));
}

TEST_CASE("theta target matches the Ulrich twist degree") {
    for (long long g = 0; g <= 6; ++g)
        for (long long e = -g; e <= 6; ++e)
            for (long long a = 1; a <= 6; ++a) {
                if ((a - 1) * e % 2 != 0) continue;
                const RuledSurface s{g, e};
                const SymPowerInvariants sym = sym_power_invariants(s, a);
                const ThetaTarget target = theta_target(s.g(), a, sym.degree);
                CHECK(target.r1 == 1);
                CHECK(Rat(target.degree) == d_invariant(s.g(), s.e(), a).value);
            }
}

TEST_CASE("Segre strata") {
    const SegreStratum five = stratum(2, 2, 1, 1, 1);
    CHECK(five.dimension == 5);  // = dim U(2,1) = 4g - 3
    CHECK_FALSE(five.in_closure_of_next);

    const SegreStratum nine = stratum(3, 2, 0, 1, 2);
    CHECK(nine.dimension == 9);
    CHECK_FALSE(nine.in_closure_of_next);

    const SegreStratum chained = stratum(4, 2, 1, 1, 1);
    CHECK(chained.dimension == 11);
    CHECK(chained.in_closure_of_next);
    const SegreStratum maximal = stratum(4, 2, 1, 1, 3);
    CHECK(maximal.dimension == 4 * 3 + 1);  // r^2(g-1) + 1 = dim U(2,1)
    CHECK(maximal.dimension == chained.dimension + 2);

    CHECK_THROWS_AS(stratum(1, 2, 1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(stratum(3, 2, 0, 1, 0), std::domain_error);   // s <= 0
    CHECK_THROWS_AS(stratum(3, 2, 0, 1, 4), std::domain_error);   // s > bound
    CHECK_THROWS_AS(stratum(3, 2, 1, 1, 2), std::domain_error);   // parity of s - r'd
    CHECK_THROWS_AS(stratum(3, 2, 0, 2, 2), std::domain_error);   // r' >= r
    CHECK_THROWS_AS(stratum(3, 1, 0, 1, 1), std::domain_error);   // r < 2

    try {
        stratum(1, 2, 1, 3, 1);
    } catch (const std::domain_error& ex) {
        const std::string msg = ex.what();
        CHECK(msg.find("g = 1") != std::string::npos);
        CHECK(msg.find("r'") != std::string::npos);  // violations listed individually
    }
}

TEST_CASE("stratum dimension grows linearly in s") {
    // admissible s for r=2, d=1 are odd; steps of r shift dimension by r
    for (long long g = 3; g <= 6; ++g) {
        const Int bound = 1 * 1 * (g - 1);
        for (long long s = 1; s + 2 <= bound; s += 2)
            CHECK(stratum(g, 2, 1, 1, s + 2).dimension ==
                  stratum(g, 2, 1, 1, s).dimension + 2);
    }
}

TEST_CASE("normalized degree bound") {
    const NormalizedDegree ok = normands_bound(3, 4, 2);
    CHECK(ok.normalized_degree == 2);
    CHECK(ok.ok);

    const NormalizedDegree too_big = normands_bound(2, 4, 4);
    CHECK_FALSE(too_big.ok);

    const NormalizedDegree above_genus = normands_bound(2, 5, 3);
    CHECK(above_genus.normalized_degree == 3);
    CHECK_FALSE(above_genus.ok);  // s > g even though parity is fine (5 - 3 = 2)

    CHECK_THROWS_AS(normands_bound(2, 5, 2), std::domain_error);  // d - s = 3 odd
    CHECK_THROWS_AS(normands_bound(4, 0, 1), std::domain_error);
}

TEST_CASE("theta properness knowledge table") {
    GenericityFlags none, bundle, curve, both;
    bundle.generic_bundle = true;
    curve.generic_curve = true;
    both.generic_bundle = both.generic_curve = true;

    const RuledSurface even{2, -2};
    CHECK(theta_proper_status(even, 4, bundle).status ==
          ThetaStatus::proper_generic_bundle);
    CHECK(theta_proper_status(even, 4, none).status == ThetaStatus::unknown);
    CHECK(theta_proper_status(even, 4, curve).status == ThetaStatus::unknown);

    const RuledSurface odd{3, -3};
    const ThetaReport report = theta_proper_status(odd, 5, both);
    CHECK(report.status == ThetaStatus::proper_generic_curve_and_bundle);
    CHECK_FALSE(report.note.empty());  // generic-curve proof only; conjectural beyond
    CHECK(theta_proper_status(odd, 5, bundle).status == ThetaStatus::unknown);
    CHECK(theta_proper_status(odd, 4, both).status == ThetaStatus::unknown);  // a even

    CHECK(theta_proper_status(RuledSurface{2, 0}, 3, both).status ==
          ThetaStatus::unknown);
    CHECK(theta_proper_status(RuledSurface{2, 1}, 3, both).status ==
          ThetaStatus::unknown);
    CHECK_THROWS_AS(theta_proper_status(even, 1, both), std::invalid_argument);
}
