#ifndef HAHN_RELATION_HPP
#define HAHN_RELATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Outcome of the bounded-degree search for a polynomial relation over Q
/// among a series family. A relation found on exact inputs is re-multiplied
/// and reported as verified; on jets the kernel only constrains trusted
/// coefficients, so the relation is a candidate valid below the common jet
/// bound.
struct RelationReport {
    enum class Outcome { verified, candidate, none_found };

    unsigned degree_bound = 0;
    std::size_t monomial_count = 0;
    Outcome outcome = Outcome::none_found;
    /// Exponent tuples in enumeration order: total degree ascending, then
    /// lexicographically descending; the constant monomial comes first.
    std::vector<std::vector<unsigned>> monomials;
    std::optional<std::vector<Rat>> coefficients; // aligned with monomials
    std::optional<Exponent> valid_below;          // candidate outcome
    std::optional<std::size_t> trusted_constraints; // none_found outcome
};

inline constexpr std::size_t kDefaultMonomialCap = 5000;

/// Enumerates all monomials of total degree <= degree in ws, expands each
/// exactly, and computes the right kernel of the trusted coefficient
/// matrix. Throws usage_error (degree 0 / empty family) and resource_error
/// (monomial count above the cap).
RelationReport find_relation(const std::vector<Series>& ws, unsigned degree,
                             std::size_t monomial_cap = kDefaultMonomialCap,
                             bool parallel = true);

/// The expansion kernel behind find_relation, exposed with a serial/parallel
/// switch: series number `j` of the result is the product prod_k ws[k]^{t_j[k]}.
std::vector<Series> expand_monomials(const std::vector<Series>& ws,
                                     const std::vector<std::vector<unsigned>>& tuples,
                                     bool parallel);

/// Monomial tuples of total degree <= degree over `count` variables.
std::vector<std::vector<unsigned>> enumerate_monomials(std::size_t count, unsigned degree);

} // namespace hahn

#endif
