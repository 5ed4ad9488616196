#include "ruled/rank2.hpp"

#include <algorithm>

namespace ruled {

SpecialUlrichTarget special_target(const RuledSurface& s, const Polarization& h) {
    const DivisorClass k = canonical_class(s);
    const Int h2 = intersect(s, h.cls(), h.cls());
    const Int hk = intersect(s, h.cls(), k);
    const Int c2 =
        half_exact(5 * h2 + 3 * hk, "special rank-2 target: 5h^2 + 3h.K") + 2 - 2 * s.g();
    return {Int(3) * h.cls() + k, c2};
}

Int u_threshold(const RuledSurface& s, const Int& a) {
    return s.e() > 0 ? a * s.e() : s.e();
}

namespace {

void require_construction_domain(const RuledSurface& s, const Polarization& h) {
    if (s.g() < 1)
        throw std::invalid_argument("rank-2 construction needs g >= 1, got g = " +
                                    s.g().str());
    if (h.a() < 2)
        throw std::invalid_argument("rank-2 construction needs a >= 2, got a = " +
                                    h.a().str());
}

const char* const kStabilityPositive =
    "mu-stability automatic: for e > 0 and a >= 2 no Ulrich line bundle can destabilize";
const char* const kStabilityCount =
    "mu-stability for the general member via dimension count: the strictly semistable "
    "family has strictly smaller dimension";

} // namespace

AcmrResult acmr_extension(const RuledSurface& s, const Polarization& h) {
    require_construction_domain(s, h);
    const Int g = s.g(), e = s.e(), a = h.a(), b = h.b();
    const Int z =
        half_exact((a - 1) * (2 * b - e * a), "rank-2 subscheme degree (a-1)(2b-ea)");
    if (z < 0)
        throw std::domain_error("subscheme degree (a-1)(b-ea/2) = " + z.str() +
                                " is negative: no such construction");
    const Rat threshold = std::max({Rat((a - 3) * (g - 1) + e * a, 2),
                                    Rat(g - 1 + u_threshold(s, a)),
                                    Rat(e * (3 * a + 1), 6) + Rat(2 * g, 3)});
    const bool sufficient = a == 2 || Rat(b) > threshold;
    const ExtensionDatum datum{{a, b + g - 1}, {2 * a - 2, 2 * b + g - 1 - e}, z, g - 1};
    return {datum, sufficient, threshold, e > 0 ? kStabilityPositive : kStabilityCount};
}

Int acmr_family_dimension(const RuledSurface& s, const Polarization& h) {
    require_construction_domain(s, h);
    const Int g = s.g(), e = s.e(), a = h.a(), b = h.b();
    return 2 * a * b - e * a * a - (a - 4) * (g - 1);
}

Rat semistable_family_bound(const RuledSurface& s, const Polarization& h) {
    require_construction_domain(s, h);
    if (s.e() > 0)
        throw std::invalid_argument("semistable family bound needs e <= 0, got e = " +
                                    s.e().str());
    const Rat a(h.a()), b(h.b()), e(s.e());
    return (a - 1) / 2 * (b + 2 - a * e / 2) - 1;
}

ExtensionDatum tstable_extension(const RuledSurface& s, const Polarization& h) {
    require_construction_domain(s, h);
    if (s.e() != 0)
        throw std::invalid_argument("stable construction needs e = 0, got e = " +
                                    s.e().str());
    if (h.b() < 3)
        throw std::invalid_argument("stable construction needs section degree b >= 3, got " +
                                    h.b().str());
    const Int g = s.g(), a = h.a(), b = h.b();
    const Int alpha = a / 2, eps = a - 2 * alpha;
    const DivisorClass d{3 * alpha - 1 + eps, b + g - 1};
    const DivisorClass aa{eps, b};
    if (aa + Int(2) * d != Int(3) * h.cls() + canonical_class(s))
        throw std::logic_error("stable construction identity A + 2D = 3H + K_S failed");
    return {d, aa + d, (alpha + eps) * b, g - 1};
}

bool extension_chern_check(const RuledSurface& s, const ExtensionDatum& datum,
                           const SpecialUlrichTarget& target) {
    return datum.sub + datum.quot == target.c1 &&
           intersect(s, datum.sub, datum.quot) + datum.z_degree == target.c2;
}

} // namespace ruled
