#pragma once

// Moduli-space bookkeeping on the base curve: the target space scanned by
// the theta-divisor condition, symmetric-power invariants, Segre-invariant
// strata of U(r,d), and the knowledge table for properness of the theta
// locus that feeds the existence verdict.

#include "ruled/surface.hpp"

#include <string>

namespace ruled {

// Where the theta condition for a rank-r degree-d bundle lives: with
// j = gcd(r,d), r1 = r/j, d1 = d/j, the complementary space is U(r1, r1(g-1)-d1);
// for r1 = 1 this is the Picard variety Pic^{g-1-d1}(C).
struct ThetaTarget {
    Int r1;
    Int degree;
    bool is_picard;

    friend bool operator==(const ThetaTarget&, const ThetaTarget&) = default;
};

ThetaTarget theta_target(const Int& g, const Int& r, const Int& d);

// Rank, degree and twist data of Sym^{a-1}(E) for normalized E of invariant
// e: rank a, degree -a(a-1)e/2 (always an integer), and the canonical twist
// of degree g-1+(a-1)e/2 whose slope lands exactly at g-1. The twist degree
// is integral iff (a-1)e is even; the flag records that obstruction.
struct SymPowerInvariants {
    Int rank;
    Int degree;
    bool twist_integral;
    Rat twist_degree;   // g-1+(a-1)e/2, exact
    Rat slope_of_twist; // (degree + rank*twist_degree)/rank, always g-1
};

SymPowerInvariants sym_power_invariants(const RuledSurface& s, const Int& a);

// Segre-invariant stratum of U(r,d): bundles whose rank-r' subbundle defect
// equals s. Valid for g >= 2, 0 < s <= r'(r-r')(g-1), s == r'd (mod r).
struct SegreStratum {
    Int r;
    Int d;
    Int r_prime;
    Int s;
    Int dimension;
    // Whether this stratum sits in the closure of the next one (s+r still
    // admissible); the chain terminates at the maximal stratum.
    bool in_closure_of_next;
};

SegreStratum stratum(const Int& g, const Int& r, const Int& d, const Int& r_prime,
                     const Int& s);

// Degree of the normalization of a rank-2 bundle of degree d and Segre
// invariant s: the normalized degree is s itself, admissible iff 0 < s <= g.
// Requires d - s even (the twisting line bundle has degree (d-s)/2).
struct NormalizedDegree {
    Int normalized_degree;
    bool ok;
};

NormalizedDegree normands_bound(const Int& g, const Int& d, const Int& s);

// What is known about properness of the theta locus of Sym^{a-1}(E) twisted
// to slope g-1, for normalized E with e < 0. The positive results require
// genericity of E (and of C when -e is odd); callers grant those via flags.
enum class ThetaStatus { proper_generic_bundle, proper_generic_curve_and_bundle, unknown };

std::string to_string(ThetaStatus status);

struct ThetaReport {
    ThetaStatus status;
    std::string citation;
    std::string note;
};

ThetaReport theta_proper_status(const RuledSurface& s, const Int& a, GenericityFlags flags);

} // namespace ruled
