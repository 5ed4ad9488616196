#pragma once

// Geometrically ruled surfaces S = P(E) -> C over a smooth curve of genus g,
// normalized so that E has invariant e = -deg(det E) and the section C0
// satisfies C0^2 = -e. Divisor classes live in the rank-2 lattice
// Pic(S)/num ~ Z<C0> + Z<f> with C0.f = 1 and f^2 = 0.

#include "ruled/arith.hpp"

#include <ostream>

namespace ruled {

// Numerical divisor class a*C0 + b*f.
struct DivisorClass {
    Int a;
    Int b;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend DivisorClass operator-(const DivisorClass& x) { return {-x.a, -x.b}; }
    friend DivisorClass operator*(const Int& n, const DivisorClass& x) {
        return {n * x.a, n * x.b};
    }
    friend std::ostream& operator<<(std::ostream& os, const DivisorClass& x) {
        return os << "(" << x.a << ", " << x.b << ")";
    }
};

// Base data (g, e). Enforces Nagata's bound e >= -g (which for g = 0 is
// exactly the Hirzebruch constraint e >= 0).
class RuledSurface {
public:
    RuledSurface(Int genus, Int invariant);

    const Int& g() const { return g_; }
    const Int& e() const { return e_; }

private:
    Int g_;
    Int e_;
};

// Genericity assumptions the caller is willing to grant. Several existence
// results hold only for a generic bundle E (resp. also a generic curve C);
// verdicts quote these flags instead of silently assuming them.
struct GenericityFlags {
    bool generic_bundle = false;
    bool generic_curve = false;
};

// Intersection pairing: (a1*C0 + b1*f).(a2*C0 + b2*f) = a1*b2 + a2*b1 - a1*a2*e.
Int intersect(const RuledSurface& s, const DivisorClass& x, const DivisorClass& y);

// K_S = -2*C0 + (2g - 2 - e)*f.
DivisorClass canonical_class(const RuledSurface& s);

// Euler characteristic via Riemann-Roch: chi(D) = (1-g) + D.(D - K)/2.
// The pairing D.(D-K) is always even, so the result is an exact integer.
Int chi(const RuledSurface& s, const DivisorClass& d);

// K_S - D, the Serre-dual twist.
DivisorClass serre_dual_class(const RuledSurface& s, const DivisorClass& d);

// Sufficient criterion for ampleness of a*C0 + b*f with a >= 1:
//   e > 0:  b - g + 1 > a*e;   e <= 0:  b - g + 1 > a*e/2
// (exact rational comparison). Throws if a < 1.
bool ample_sufficient(const RuledSurface& s, const DivisorClass& h);

// Necessary conditions for very ampleness, used to gate verdicts:
// a >= 1, h^2 > 0, h.f >= 1, and h.C0 >= 1 (>= 3 when g >= 1 and e = 0).
// Not sufficient for e < 0, so callers treat failures as definite
// rejections and successes as assumptions.
bool very_ample_necessary(const RuledSurface& s, const DivisorClass& h);

// A chosen polarization class h = a*C0 + b*f. When constructed as
// "assumed very ample" it additionally enforces h^2 > 0.
class Polarization {
public:
    Polarization(const RuledSurface& s, DivisorClass h, bool assumed_very_ample = true);

    const DivisorClass& cls() const { return h_; }
    const Int& a() const { return h_.a; }
    const Int& b() const { return h_.b; }
    bool assumed_very_ample() const { return assumed_; }

private:
    DivisorClass h_;
    bool assumed_;
};

} // namespace ruled
