#ifndef HAHN_RATIONAL_HPP
#define HAHN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hahn/errors.hpp"

namespace hahn {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// mpq_rational's string and (num, den) constructors do not canonicalize,
// and GMP arithmetic assumes canonical operands. All construction goes
// through these helpers.

inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat r(num, den);
    mpq_canonicalize(r.backend().data());
    return r;
}

inline Rat make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

/// Parses "p" or "p/q" with optional leading sign. Returns nothing on
/// malformed input.
std::optional<Rat> parse_rational(std::string_view text);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Canonical rendering: lowest terms, denominator omitted when 1,
/// sign on the numerator.
inline std::string to_string(const Rat& r) { return r.str(); }

/// Scales a rational vector to coprime integers with the first nonzero
/// entry positive. The zero vector is returned unchanged.
std::vector<Rat> normalize_to_integers(const std::vector<Rat>& v);

} // namespace hahn

#endif
