#include "ruled/surface.hpp"

namespace ruled {

RuledSurface::RuledSurface(Int genus, Int invariant)
    : g_(std::move(genus)), e_(std::move(invariant)) {
    if (g_ < 0) throw std::invalid_argument("genus must be >= 0, got " + g_.str());
    if (e_ < -g_)
        throw std::invalid_argument("invariant e = " + e_.str() +
                                    " violates Nagata's bound e >= -g for g = " + g_.str());
}

Int intersect(const RuledSurface& s, const DivisorClass& x, const DivisorClass& y) {
    return x.a * y.b + y.a * x.b - x.a * y.a * s.e();
}

DivisorClass canonical_class(const RuledSurface& s) {
    return {-2, 2 * s.g() - 2 - s.e()};
}

Int chi(const RuledSurface& s, const DivisorClass& d) {
    const Int pairing = intersect(s, d, d - canonical_class(s));
    return (1 - s.g()) + half_exact(pairing, "chi: D.(D-K)");
}

DivisorClass serre_dual_class(const RuledSurface& s, const DivisorClass& d) {
    return canonical_class(s) - d;
}

bool ample_sufficient(const RuledSurface& s, const DivisorClass& h) {
    if (h.a < 1)
        throw std::invalid_argument("ampleness test needs fiber degree a >= 1, got " +
                                    h.a.str());
    const Int lhs = h.b - s.g() + 1;
    if (s.e() > 0) return lhs > h.a * s.e();
    return Rat(lhs) > Rat(h.a * s.e(), 2);
}

bool very_ample_necessary(const RuledSurface& s, const DivisorClass& h) {
    if (h.a < 1) return false;
    if (intersect(s, h, h) <= 0) return false;
    const Int section_degree = h.b - h.a * s.e(); // h.C0
    const Int min_section = (s.g() >= 1 && s.e() == 0) ? 3 : 1;
    return section_degree >= min_section;
}

Polarization::Polarization(const RuledSurface& s, DivisorClass h, bool assumed_very_ample)
    : h_(std::move(h)), assumed_(assumed_very_ample) {
    if (h_.a < 1)
        throw std::invalid_argument("polarization needs fiber degree a >= 1, got " +
                                    h_.a.str());
    if (assumed_ && intersect(s, h_, h_) <= 0)
        throw std::invalid_argument("polarization assumed very ample but h^2 <= 0");
}

} // namespace ruled
