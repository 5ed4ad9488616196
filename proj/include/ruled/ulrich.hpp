#pragma once

// Ulrich line-bundle calculus: the twist degree d(a,g,e), the two candidate
// classes and their duality, the numerical characterization, the exact
// definitional test at g = 0, and the existence verdict engine.

#include "ruled/cohom.hpp"
#include "ruled/moduli.hpp"
#include "ruled/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ruled {

struct TwistDegree {
    Rat value; // g - 1 + (a-1)e/2, exact
    bool integral;
};

// d(a,g,e) = g - 1 + (a-1)e/2; integral iff (a-1)e is even.
TwistDegree d_invariant(const Int& g, const Int& e, const Int& a);

enum class CandidateFamily { high, low };

struct UlrichCandidate {
    DivisorClass cls;
    CandidateFamily family;
    Int u_degree;              // deg(u) = d(a,g,e)
    bool genericity_required;  // the twist u must be generic once g >= 1
};

struct CandidatePair {
    UlrichCandidate high; // (2a-1, b + d)
    UlrichCandidate low;  // (a-1, 2b + 2g-2-e - d)
};

// The two candidate Ulrich classes for polarization H = aC0 + bf. Throws
// std::domain_error when (a-1)e is odd (non-integral twist degree: no
// Ulrich line bundle can exist).
CandidatePair candidate_classes(const RuledSurface& s, const Polarization& h);

// Ulrich dual of a line-bundle class on a polarized surface: 3H + K_S - D.
// An involution exchanging the two candidates.
DivisorClass ulrich_dual(const RuledSurface& s, const Polarization& h,
                         const DivisorClass& d);

// Numerical characterization: D^2 = 2(h^2 - 1 + g) + D.K_S and
// D.h = (3h^2 + h.K_S)/2. Necessary for Ulrich; at g = 0 combined with the
// definitional test below, for g >= 1 combined with genericity of the twist.
bool numerical_ulrich_check(const RuledSurface& s, const Polarization& h,
                            const DivisorClass& d);

// Exact definitional test at g = 0 via the cohomology oracle: all four
// vanishings h^1(D-H) = h^0(D-H) = h^2(D-2H) = h^1(D-2H) = 0.
bool definitional_ulrich_check_g0(const RuledSurface& s, const Polarization& h,
                                  const DivisorClass& d);

// Brute-force enumeration of Ulrich line classes on a Hirzebruch surface:
// every class with |coefficients| <= limit passing the definitional test,
// in lexicographic order.
std::vector<DivisorClass> ulrich_classes_g0(const RuledSurface& s, const Polarization& h,
                                            const Int& limit);

enum class VerdictOutcome {
    exists,
    exists_generic_bundle,
    exists_generic_curve_and_bundle,
    not_exists,
    open,
};

std::string to_string(VerdictOutcome outcome);

struct UlrichVerdict {
    VerdictOutcome outcome;
    std::string citation;
    std::optional<Int> family_dimension;      // g, when the two-family result applies
    std::string notes;                        // scope caveats (e.g. parity is rank-1 only)
    std::optional<CandidatePair> candidates;  // present unless parity obstructs
};

// First-match decision table over the classification results. Requires H to
// pass very_ample_necessary (std::domain_error otherwise). Genericity flags
// are caller-granted assumptions; without them conditional branches report
// OPEN rather than assuming anything.
UlrichVerdict existence_verdict(const RuledSurface& s, const Polarization& h,
                                GenericityFlags flags);

} // namespace ruled
