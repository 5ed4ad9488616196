#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers for all
// lattice computations, exact rationals for the few genuinely fractional
// quantities (ampleness thresholds, family-dimension bounds). No floating
// point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ruled {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_even(const Int& n) { return n % 2 == 0; }

// Exact halving; the callers' parity proofs make the throw unreachable,
// but a silent truncation would corrupt every downstream value.
inline Int half_exact(const Int& n, const char* what) {
    if (!is_even(n)) throw std::logic_error(std::string(what) + ": odd value " + n.str());
    return n / 2;
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Narrowing used only when serializing records; sweep inputs are tiny.
inline long long to_ll(const Int& n) {
    if (n < std::numeric_limits<long long>::min() || n > std::numeric_limits<long long>::max())
        throw std::logic_error("record value out of 64-bit range: " + n.str());
    return n.convert_to<long long>();
}

} // namespace ruled
