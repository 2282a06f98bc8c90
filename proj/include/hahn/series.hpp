#ifndef HAHN_SERIES_HPP
#define HAHN_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hahn/exponent.hpp"
#include "hahn/rational.hpp"

namespace hahn {

/// Generalized power series with exact rational coefficients and a finite
/// term list. An optional guarantee bound omega marks the series as a jet:
/// every coefficient at an exponent strictly below omega is exact, terms at
/// or above omega may be missing or wrong. Without the bound the series is
/// exact everywhere.
class Series {
public:
    struct Term {
        Exponent exponent;
        Rat coeff; // nonzero
    };

    Series() = default;

    static Series zero() { return {}; }
    static Series one() { return constant(Rat(1)); }
    static Series constant(const Rat& c);
    static Series monomial(const Exponent& g, const Rat& c = Rat(1));
    /// Merges duplicates, drops zeros, sorts.
    static Series from_terms(std::vector<Term> terms,
                             std::optional<Exponent> guarantee = std::nullopt);

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Exponent>& guarantee() const { return guarantee_; }

    bool is_structurally_zero() const { return terms_.empty(); }
    /// Exact zero series: no terms and no jet bound.
    bool is_zero() const { return terms_.empty() && !guarantee_; }
    bool is_exact() const { return !guarantee_.has_value(); }

    /// Least exponent of the term list. Throws domain_error when there are
    /// no stored terms (valuation of zero is undefined).
    const Exponent& valuation() const;

    Rat coefficient_at(const Exponent& g) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series scaled(const Rat& q) const;
    Series pow(unsigned e) const;

    bool operator==(const Series& o) const;

    /// Replaces the jet bound with the minimum of the current and given
    /// bounds (absent input keeps the current bound).
    Series with_guarantee(const std::optional<Exponent>& omega) const;

    /// Drops stored terms with exponent >= bound. Only meaningful when the
    /// caller also installs a jet bound at or below `bound`.
    Series truncated_at(const Exponent& bound) const;

    /// True when (*this - o) has no stored term with exponent < bound.
    bool agrees_below(const Series& o, const Exponent& bound) const;

    /// Canonical rendering: ascending exponents, explicit coefficients on
    /// monomials, bare rational for the exponent-0 term; "0" when empty.
    std::string str() const;

private:
    std::vector<Term> terms_;
    std::optional<Exponent> guarantee_;
};

/// Direct-sum split K = A + C + M: support below zero, the coefficient at
/// zero, and support above zero. The parts reconstruct the input exactly.
struct Decomposition {
    Series negative_part;
    Rat constant_term;
    Series infinitesimal_part;
};

Decomposition decompose(const Series& y);

/// y minus its exponent-zero coefficient.
Series drop_constant_term(const Series& y);

/// Multiplicative inverse as a Neumann partial sum: for a = c t^g (1 + eps),
/// returns c^-1 t^-g * sum_{k<=depth} (-eps)^k, a jet below
/// -g + (depth+1) v(eps); exact when eps = 0. Throws domain_error on zero.
Series inverse(const Series& a, unsigned depth);

/// Combines optional jet bounds by minimum; absent bounds do not restrict.
std::optional<Exponent> min_guarantee(const std::optional<Exponent>& a,
                                      const std::optional<Exponent>& b);

using TermMap = std::map<Exponent, Rat, ExponentLess>;

} // namespace hahn

#endif
