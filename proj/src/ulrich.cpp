#include "ruled/ulrich.hpp"

namespace ruled {

TwistDegree d_invariant(const Int& g, const Int& e, const Int& a) {
    if (a < 1) throw std::invalid_argument("fiber degree a must be >= 1, got " + a.str());
    const Rat value(2 * (g - 1) + (a - 1) * e, 2);
    return {value, is_even((a - 1) * e)};
}

CandidatePair candidate_classes(const RuledSurface& s, const Polarization& h) {
    const TwistDegree d = d_invariant(s.g(), s.e(), h.a());
    if (!d.integral)
        throw std::domain_error("(a-1)e = " + Int((h.a() - 1) * s.e()).str() +
                                " is odd: twist degree " + rat_str(d.value) +
                                " is non-integral, no Ulrich line bundle exists");
    const Int du = numerator(d.value);
    const bool generic = s.g() >= 1;
    const DivisorClass high{2 * h.a() - 1, h.b() + du};
    const DivisorClass low{h.a() - 1, 2 * h.b() + 2 * s.g() - 2 - s.e() - du};
    return {{high, CandidateFamily::high, du, generic},
            {low, CandidateFamily::low, du, generic}};
}

DivisorClass ulrich_dual(const RuledSurface& s, const Polarization& h,
                         const DivisorClass& d) {
    return Int(3) * h.cls() + canonical_class(s) - d;
}

bool numerical_ulrich_check(const RuledSurface& s, const Polarization& h,
                            const DivisorClass& d) {
    const DivisorClass k = canonical_class(s);
    const Int h2 = intersect(s, h.cls(), h.cls());
    const Int dh_target = half_exact(3 * h2 + intersect(s, h.cls(), k),
                                     "numerical Ulrich check: 3h^2 + h.K");
    const bool square_ok =
        intersect(s, d, d) == 2 * (h2 - 1 + s.g()) + intersect(s, d, k);
    const bool degree_ok = intersect(s, d, h.cls()) == dh_target;
    return square_ok && degree_ok;
}

bool definitional_ulrich_check_g0(const RuledSurface& s, const Polarization& h,
                                  const DivisorClass& d) {
    const CohomologyVector once = oracle_cohomology_g0(s, d - h.cls());
    if (once.h0 != 0 || once.h1 != 0) return false;
    const CohomologyVector twice = oracle_cohomology_g0(s, d - Int(2) * h.cls());
    return twice.h1 == 0 && twice.h2 == 0;
}

std::vector<DivisorClass> ulrich_classes_g0(const RuledSurface& s, const Polarization& h,
                                            const Int& limit) {
    if (limit < 0)
        throw std::invalid_argument("grid limit must be >= 0, got " + limit.str());
    std::vector<DivisorClass> found;
    for (Int t = -limit; t <= limit; ++t)
        for (Int b = -limit; b <= limit; ++b)
            if (DivisorClass d{t, b}; definitional_ulrich_check_g0(s, h, d))
                found.push_back(d);
    return found;
}

std::string to_string(VerdictOutcome outcome) {
    switch (outcome) {
        case VerdictOutcome::exists: return "EXISTS";
        case VerdictOutcome::exists_generic_bundle: return "EXISTS_GENERIC_BUNDLE";
        case VerdictOutcome::exists_generic_curve_and_bundle:
            return "EXISTS_GENERIC_CURVE_AND_BUNDLE";
        case VerdictOutcome::not_exists: return "NOT_EXISTS";
        case VerdictOutcome::open: return "OPEN";
    }
    throw std::logic_error("unhandled verdict outcome");
}

namespace {

const char* const kCitePositiveRankOne =
    "e > 0: Ulrich line bundles exist if and only if a = 1; the candidate pair realizes "
    "the minimal Ulrich rank";
const char* const kCitePositiveNone =
    "e > 0, a >= 2: no Ulrich line bundle exists (the a = 1 criterion fails)";
const char* const kCiteParity =
    "(a-1)e odd: the twist degree g-1+(a-1)e/2 is non-integral, so no Ulrich line "
    "bundle exists";
const char* const kCiteTwoFamilies =
    "(a-1)e = 0: two families of Ulrich line bundles of dimension g";
const char* const kCiteGenusOne =
    "g = 1, e = -1, a odd: Ulrich line bundles exist (Raynaud, Cor. 1.7.3)";
const char* const kCiteRankTwoTheta =
    "e < 0 even, a = 2: Ulrich line bundles exist (rank-2 theta condition, Raynaud, "
    "Prop. 1.6.2)";
const char* const kCiteGenusTwo =
    "e < 0, a = 3, g = 2: Ulrich line bundles exist (symmetric-square theta condition "
    "on a genus-2 curve)";
const char* const kCiteGenericCurve =
    "e < 0, a = 3, generic curve: Ulrich line bundles exist (symmetric-square theta "
    "condition)";
const char* const kCiteOpen =
    "no unconditional existence criterion applies; remaining results need genericity "
    "assumptions not granted here";
const char* const kNoteParityRankOne =
    "the parity obstruction applies to line bundles only; rank-2 constructions are "
    "unaffected";
const char* const kNoteOpenHint =
    "granting generic-bundle (and generic-curve when e is odd) yields a generic "
    "existence result";

UlrichVerdict verdict_with_candidates(const RuledSurface& s, const Polarization& h,
                                      UlrichVerdict v) {
    v.candidates = candidate_classes(s, h);
    return v;
}

} // namespace

UlrichVerdict existence_verdict(const RuledSurface& s, const Polarization& h,
                                GenericityFlags flags) {
    if (!very_ample_necessary(s, h.cls()))
        throw std::domain_error("polarization (" + h.a().str() + ", " + h.b().str() +
                                ") fails the very-ampleness conditions for g = " +
                                s.g().str() + ", e = " + s.e().str());
    const Int& g = s.g();
    const Int& e = s.e();
    const Int& a = h.a();

    if (e > 0 && a == 1)
        return verdict_with_candidates(
            s, h, {VerdictOutcome::exists, kCitePositiveRankOne, g, "", {}});
    if (e > 0)
        return {VerdictOutcome::not_exists, kCitePositiveNone, std::nullopt, "", {}};
    if (!is_even((a - 1) * e))
        return {VerdictOutcome::not_exists, kCiteParity, std::nullopt, kNoteParityRankOne,
                {}};
    if ((a - 1) * e == 0)
        return verdict_with_candidates(
            s, h, {VerdictOutcome::exists, kCiteTwoFamilies, g, "", {}});

    // From here on e < 0 with (a-1)e even and a >= 2.
    if (g == 1)
        return verdict_with_candidates(
            s, h, {VerdictOutcome::exists, kCiteGenusOne, std::nullopt, "", {}});
    if (a == 2)
        return verdict_with_candidates(
            s, h, {VerdictOutcome::exists, kCiteRankTwoTheta, std::nullopt, "", {}});
    if (a == 3 && g == 2)
        return verdict_with_candidates(
            s, h, {VerdictOutcome::exists, kCiteGenusTwo, std::nullopt, "", {}});
    if (a == 3 && flags.generic_curve)
        return verdict_with_candidates(
            s, h,
            {VerdictOutcome::exists_generic_curve_and_bundle, kCiteGenericCurve,
             std::nullopt, "", {}});

    const ThetaReport theta = theta_proper_status(s, a, flags);
    switch (theta.status) {
        case ThetaStatus::proper_generic_bundle:
            return verdict_with_candidates(
                s, h,
                {VerdictOutcome::exists_generic_bundle, theta.citation, std::nullopt,
                 theta.note, {}});
        case ThetaStatus::proper_generic_curve_and_bundle:
            return verdict_with_candidates(
                s, h,
                {VerdictOutcome::exists_generic_curve_and_bundle, theta.citation,
                 std::nullopt, theta.note, {}});
        case ThetaStatus::unknown:
            return verdict_with_candidates(
                s, h, {VerdictOutcome::open, kCiteOpen, std::nullopt, kNoteOpenHint, {}});
    }
    throw std::logic_error("unhandled theta status");
}

} // namespace ruled
