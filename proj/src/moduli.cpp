#include "ruled/moduli.hpp"

#include <vector>

namespace ruled {

ThetaTarget theta_target(const Int& g, const Int& r, const Int& d) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1, got " + r.str());
    const Int j = boost::multiprecision::gcd(r, abs(d));
    const Int r1 = r / j;
    const Int d1 = d / j;
    return {r1, r1 * (g - 1) - d1, r1 == 1};
}

SymPowerInvariants sym_power_invariants(const RuledSurface& s, const Int& a) {
    if (a < 1) throw std::invalid_argument("fiber degree a must be >= 1, got " + a.str());
    const Int degree = -half_exact(a * (a - 1) * s.e(), "sym power degree a(a-1)e");
    const Rat twist = Rat(2 * (s.g() - 1) + (a - 1) * s.e(), 2);
    const Rat slope = (Rat(degree) + Rat(a) * twist) / Rat(a);
    return {a, degree, is_even((a - 1) * s.e()), twist, slope};
}

SegreStratum stratum(const Int& g, const Int& r, const Int& d, const Int& r_prime,
                     const Int& s) {
    std::vector<std::string> violations;
    if (g < 2)
        violations.push_back("g = " + g.str() +
                             ": no integers s satisfy the stratum restrictions for g < 2");
    if (r < 2) violations.push_back("rank r must be >= 2, got " + r.str());
    if (r_prime < 1 || r_prime >= r)
        violations.push_back("subbundle rank r' must satisfy 1 <= r' < r, got " +
                             r_prime.str());
    const Int bound = r_prime * (r - r_prime) * (g - 1);
    if (violations.empty()) {
        if (s <= 0 || s > bound)
            violations.push_back("Segre invariant s = " + s.str() +
                                 " outside (0, r'(r-r')(g-1)] = (0, " + bound.str() + "]");
        // cpp_int % truncates toward zero; normalize to a true residue test.
        if ((s - r_prime * d) % r != 0)
            violations.push_back("congruence s == r'd (mod r) fails: s = " + s.str() +
                                 ", r'd = " + Int(r_prime * d).str() + ", r = " + r.str());
    }
    if (!violations.empty()) {
        std::string msg = "invalid Segre stratum:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw std::domain_error(msg);
    }
    const Int dim = r * r * (g - 1) + 1 + s - bound;
    return {r, d, r_prime, s, dim, s + r <= bound};
}

NormalizedDegree normands_bound(const Int& g, const Int& d, const Int& s) {
    if (!is_even(d - s))
        throw std::domain_error("d - s = " + Int(d - s).str() +
                                " is odd: no twisting line bundle of degree (d-s)/2");
    return {s, s > 0 && s <= g};
}

std::string to_string(ThetaStatus status) {
    switch (status) {
        case ThetaStatus::proper_generic_bundle: return "PROPER_GENERIC_BUNDLE";
        case ThetaStatus::proper_generic_curve_and_bundle:
            return "PROPER_GENERIC_CURVE_AND_BUNDLE";
        case ThetaStatus::unknown: return "UNKNOWN";
    }
    throw std::logic_error("unhandled theta status");
}

namespace {

const char* const kThetaEven =
    "e < 0 even: the theta locus of the twisted symmetric power of a generic bundle is a "
    "proper divisor of the Picard variety";
const char* const kThetaOdd =
    "e < 0 odd, a odd: for a generic curve and a generic bundle the theta locus of the "
    "twisted symmetric power is a proper divisor";
const char* const kThetaUnknown = "theta-locus properness not established for this input";
const char* const kThetaOddNote =
    "conjectured to hold for every curve; proved only for a generic one";

} // namespace

ThetaReport theta_proper_status(const RuledSurface& s, const Int& a, GenericityFlags flags) {
    if (a < 2)
        throw std::invalid_argument("theta properness table needs a >= 2, got " + a.str());
    if (s.e() >= 0) return {ThetaStatus::unknown, kThetaUnknown, ""};
    if (is_even(s.e())) {
        if (flags.generic_bundle)
            return {ThetaStatus::proper_generic_bundle, kThetaEven, ""};
        return {ThetaStatus::unknown, kThetaUnknown, ""};
    }
    if (!is_even(a)) {
        if (flags.generic_curve && flags.generic_bundle)
            return {ThetaStatus::proper_generic_curve_and_bundle, kThetaOdd, kThetaOddNote};
        return {ThetaStatus::unknown, kThetaUnknown, ""};
    }
    return {ThetaStatus::unknown, kThetaUnknown, ""};
}

} // namespace ruled
