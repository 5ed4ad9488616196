#pragma once

// Cohomology of line bundles: an exact oracle on genus-0 (Hirzebruch)
// surfaces via pushforward to P^1, plus genus-g section-count models and
// bounds for symmetric powers, and the Raynaud-style theta-divisor
// condition that drives the higher-genus existence results.

#include "ruled/surface.hpp"

#include <string>

namespace ruled {

struct CohomologyVector {
    Int h0;
    Int h1;
    Int h2;
    bool exact; // false would mark a bound-only result; the g=0 oracle is exact

    friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

// Exact h^i(S, O(t*C0 + b*f)) on the Hirzebruch surface F_e (g = 0 only).
// Pushforward along the ruling splits everything into P^1 line bundles:
//   t >= 0:  h^0 = sum_{i=0..t} max(0, b - i*e + 1),
//            h^1 = sum_{i=0..t} max(0, i*e - b - 1),  h^2 = 0;
//   t == -1: all zero;
//   t <= -2: Serre duality h^i(D) = h^{2-i}(K - D), one recursion step.
// Throws std::invalid_argument when s.g() != 0.
CohomologyVector oracle_cohomology_g0(const RuledSurface& s, const DivisorClass& d);

// Which section-count model to use for a degree-d line bundle on a genus-g
// curve: the generic (general-position) count or the Clifford upper bound.
enum class SectionModel { generic, clifford };

// Generic model: h^0 = max(0, d - g + 1) for d >= 0 (exact for a general
// bundle of degree 0 <= d <= 2g-2, and for every bundle outside [0, 2g-2]
// except the trivial-summand corner cases the bounds below absorb).
Int h0_line_generic(const Int& genus, const Int& degree);

// Clifford-style upper bound valid for every line bundle:
//   0 if d < 0,  d - g + 1 if d > 2g - 2,  floor(d/2) + 1 otherwise.
Int clifford_upper(const Int& genus, const Int& degree);

struct H0Bounds {
    Int lo;
    Int hi;
    SectionModel model;
};

// Bounds for h^0 of (Sym^t E)(D_d) with deg D_d = d on the base curve,
// E normalized of invariant e. The splitting-type upper bound sums the
// chosen model over the degrees d, d - e, ..., d - t*e; the lower bound is
// the model at degree d alone. Requires t >= 0.
H0Bounds h0_sym_bounds(const RuledSurface& s, const Int& t, const Int& d, SectionModel model);

// Status of Raynaud's condition (*) -- "every twist of (Sym^{a-1} E) by a
// generic degree-d(a) bundle has the generic number of sections" -- for the
// symmetric power controlling fiber degree a. Preconditions: a >= 1 and
// (a-1)e even (otherwise the twist degree is non-integral).
enum class RaynaudStatus { holds, holds_generic_curve, unknown };

struct RaynaudReport {
    RaynaudStatus status;
    std::string citation;
};

RaynaudReport raynaud_star_status(const RuledSurface& s, const Int& a);

} // namespace ruled
