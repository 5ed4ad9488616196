#include "ruled/cohom.hpp"

namespace ruled {

CohomologyVector oracle_cohomology_g0(const RuledSurface& s, const DivisorClass& d) {
    if (s.g() != 0)
        throw std::invalid_argument("exact cohomology oracle requires genus 0, got g = " +
                                    s.g().str());
    const Int& t = d.a;
    if (t <= -2) {
        // Serre duality: h^i(D) = h^{2-i}(K - D); K - D has fiber degree >= 0.
        const CohomologyVector dual = oracle_cohomology_g0(s, serre_dual_class(s, d));
        return {dual.h2, dual.h1, dual.h0, true};
    }
    if (t == -1) return {0, 0, 0, true};
    Int h0 = 0, h1 = 0;
    for (Int i = 0; i <= t; ++i) {
        const Int m = d.b - i * s.e(); // summand O_{P^1}(m) of the pushforward
        if (m >= 0) h0 += m + 1;
        if (m <= -2) h1 += -m - 1;
    }
    return {h0, h1, 0, true};
}

Int h0_line_generic(const Int& genus, const Int& degree) {
    const Int value = degree - genus + 1;
    return value > 0 ? value : Int(0);
}

Int clifford_upper(const Int& genus, const Int& degree) {
    if (degree < 0) return 0;
    if (degree > 2 * genus - 2) return degree - genus + 1;
    return degree / 2 + 1;
}

H0Bounds h0_sym_bounds(const RuledSurface& s, const Int& t, const Int& d, SectionModel model) {
    if (t < 0)
        throw std::invalid_argument("symmetric power exponent must be >= 0, got " + t.str());
    const auto eval = (model == SectionModel::generic) ? h0_line_generic : clifford_upper;
    Int hi = 0;
    for (Int i = 0; i <= t; ++i) hi += eval(s.g(), d - i * s.e());
    return {eval(s.g(), d), hi, model};
}

namespace {

const char* const kRaynaudZero =
    "(a-1)e = 0: a generic twist of degree g-1 lies off the theta locus of the symmetric power";
const char* const kRaynaudGenusOne =
    "g = 1, e = -1: symmetric powers are semistable with generic cohomology (Raynaud, Cor. 1.7.3)";
const char* const kRaynaudRankTwo =
    "e < 0, a = 2: rank-2 theta-divisor condition (Raynaud, Prop. 1.6.2)";
const char* const kRaynaudGenusTwo =
    "e < 0, a = 3, g = 2: symmetric-square theta condition on a genus-2 curve (Raynaud, sec. 1.7)";
const char* const kRaynaudGenericCurve =
    "e < 0, a = 3: symmetric-square theta condition, established for a generic curve";
const char* const kRaynaudUnknownPos =
    "e > 0: symmetric powers of the normalized bundle are unstable; no positive result applies";
const char* const kRaynaudUnknown =
    "no applicable theta-divisor result for this (g, e, a)";

} // namespace

RaynaudReport raynaud_star_status(const RuledSurface& s, const Int& a) {
    if (a < 1)
        throw std::invalid_argument("fiber degree a must be >= 1, got " + a.str());
    if (!is_even((a - 1) * s.e()))
        throw std::domain_error("twist degree g-1+(a-1)e/2 is non-integral: (a-1)e = " +
                                Int((a - 1) * s.e()).str() + " is odd");
    if ((a - 1) * s.e() == 0) return {RaynaudStatus::holds, kRaynaudZero};
    if (s.e() > 0) return {RaynaudStatus::unknown, kRaynaudUnknownPos};
    if (s.g() == 1) return {RaynaudStatus::holds, kRaynaudGenusOne};
    if (a == 2) return {RaynaudStatus::holds, kRaynaudRankTwo};
    if (a == 3 && s.g() == 2) return {RaynaudStatus::holds, kRaynaudGenusTwo};
    if (a == 3) return {RaynaudStatus::holds_generic_curve, kRaynaudGenericCurve};
    return {RaynaudStatus::unknown, kRaynaudUnknown};
}

} // namespace ruled
