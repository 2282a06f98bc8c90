#ifndef HAHN_EXPONENT_HPP
#define HAHN_EXPONENT_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hahn/rational.hpp"

namespace hahn {

/// Order-preserving right shift on integer index points: phi -> phi + offset.
struct ShiftMap {
    int offset = 1; // >= 1

    Rat apply(const Rat& phi) const { return phi + offset; }
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Element of the exponent group: a finite rational combination of atom
/// basis elements e(i) (1 at index i) and tail basis elements tau(i)
/// (1 at each of i+offset, i+2*offset, ... for the ambient shift).
///
/// The group is ordered lexicographically by index: the coefficient at the
/// least index of the induced support decides the sign. Tail-bearing
/// exponents carry the shift offset they are interpreted under; tail-free
/// exponents are compatible with every offset.
class Exponent {
public:
    using Entry = std::pair<Rat, Rat>; // (index, coefficient), coefficient != 0

    Exponent() = default;

    static Exponent atom(const Rat& index, const Rat& coeff = Rat(1));
    /// tau(index) under sigma = +offset; index must be an integer.
    static Exponent tail(const Rat& index, const ShiftMap& sigma, const Rat& coeff = Rat(1));

    /// Builds from coefficient lists; merges duplicates, drops zeros.
    /// `shift` is required when tails end up nonempty.
    static Exponent make(std::vector<Entry> atoms, std::vector<Entry> tails,
                         std::optional<int> shift);

    const std::vector<Entry>& atoms() const { return atoms_; }
    const std::vector<Entry>& tails() const { return tails_; }
    /// Present iff tails() is nonempty.
    std::optional<int> shift() const { return shift_; }

    bool has_tails() const { return !tails_.empty(); }
    /// Structural zero; equivalent to sign() == zero by canonicality of
    /// the per-basis maps.
    bool is_structurally_zero() const { return atoms_.empty() && tails_.empty(); }

    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;
    Exponent operator-() const;
    Exponent scaled(const Rat& q) const;

    /// Sign of the coefficient at the least index of the induced support.
    Sign sign() const;

    bool is_zero() const;
    bool is_positive() const { return sign() == Sign::positive; }
    bool is_negative() const { return sign() == Sign::negative; }

    /// Total order: sign of (*this - o). Throws config_error on offset
    /// mismatch between tail-bearing operands.
    std::strong_ordering compare(const Exponent& o) const;

    bool operator==(const Exponent& o) const { return compare(o) == std::strong_ordering::equal; }
    bool operator<(const Exponent& o) const { return compare(o) == std::strong_ordering::less; }
    bool operator<=(const Exponent& o) const { return compare(o) != std::strong_ordering::greater; }
    bool operator>(const Exponent& o) const { return compare(o) == std::strong_ordering::greater; }
    bool operator>=(const Exponent& o) const { return compare(o) != std::strong_ordering::less; }

    /// Rendering per the frontend grammar: "q*e(i)" / "q*tau(i)" joined by
    /// +/- in ascending index order (atom before tail at equal index);
    /// the zero exponent renders as "0".
    std::string str() const;

private:
    std::vector<Entry> atoms_; // sorted by index, no zero coefficients
    std::vector<Entry> tails_; // sorted by index, integer indices, no zeros
    std::optional<int> shift_;

    void check_invariants() const;
};

/// Least element of two compatible exponents.
inline const Exponent& min(const Exponent& a, const Exponent& b) { return b < a ? b : a; }

/// Splits tau(phi) into (e(sigma(phi)), tau(sigma(phi))); the two parts sum
/// back to tau(phi). phi must be an integer index point.
std::pair<Exponent, Exponent> tail_unfold(const Rat& phi, const ShiftMap& sigma);

/// Strict-order functor for ordered containers keyed by Exponent.
struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return a < b; }
};

} // namespace hahn

#endif
