#pragma once

// Special rank-2 Ulrich calculus: Chern-class targets, the two extension
// constructions with their sufficiency thresholds, family dimensions, and
// extension consistency checks.

#include "ruled/surface.hpp"

#include <string>

namespace ruled {

// Chern data every special (self-dual) rank-2 Ulrich bundle must carry:
// c1 = 3H + K_S and c2 = (5h^2 + 3h.K_S)/2 + 2 - 2g.
struct SpecialUlrichTarget {
    DivisorClass c1;
    Int c2;

    friend bool operator==(const SpecialUlrichTarget&, const SpecialUlrichTarget&) = default;
};

SpecialUlrichTarget special_target(const RuledSurface& s, const Polarization& h);

// Construction datum 0 -> O(sub) -> F -> I_Z(quot) -> 0 with Z a general
// 0-dimensional subscheme of degree z_degree; generic_v_degree records the
// degree (g-1) of the generic curve divisor entering the construction.
struct ExtensionDatum {
    DivisorClass sub;
    DivisorClass quot;
    Int z_degree;
    Int generic_v_degree;
};

// u_e = ae for e > 0, else e: the twist slack entering the ampleness-style
// threshold below.
Int u_threshold(const RuledSurface& s, const Int& a);

struct AcmrResult {
    ExtensionDatum datum;
    bool sufficient;      // a = 2, or b strictly above the threshold
    Rat threshold;        // max{((a-3)(g-1)+ea)/2, (g-1)+u_e, e(3a+1)/6+2g/3}
    std::string stability_note;
};

// Ideal-sheaf extension construction: sub = (a, b+g-1),
// quot = (2a-2, 2b+g-1-e), z_degree = (a-1)(b-ea/2). Requires g >= 1,
// a >= 2; rejects negative z_degree.
AcmrResult acmr_extension(const RuledSurface& s, const Polarization& h);

// Dimension 2ab - ea^2 - (a-4)(g-1) of the family the construction sweeps.
Int acmr_family_dimension(const RuledSurface& s, const Polarization& h);

// Upper bound (a-1)/2 * (b + 2 - ae/2) - 1 for the dimension of the family
// of strictly semistable members; requires e <= 0. Strictly below
// acmr_family_dimension whenever 3b >= e(3a+1)/2 + 2g.
Rat semistable_family_bound(const RuledSurface& s, const Polarization& h);

// Stability-oriented construction on surfaces with e = 0: with
// alpha = floor(a/2) and eps = a - 2*alpha, sub = (3*alpha-1+eps, b+g-1),
// quot = sub + (eps, b), z_degree = (alpha+eps)*b. Requires g >= 1, a >= 2,
// b >= 3.
ExtensionDatum tstable_extension(const RuledSurface& s, const Polarization& h);

// Chern consistency of an extension against a target: sub + quot = c1 and
// sub.quot + z_degree = c2.
bool extension_chern_check(const RuledSurface& s, const ExtensionDatum& datum,
                           const SpecialUlrichTarget& target);

} // namespace ruled
