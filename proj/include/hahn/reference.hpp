#ifndef HAHN_REFERENCE_HPP
#define HAHN_REFERENCE_HPP

#include <optional>

#include "hahn/exponent.hpp"
#include "hahn/linalg.hpp"
#include "hahn/series.hpp"

// Independent reference implementations. These deliberately use the most
// straightforward algorithm available and are kept only as cross-checks for
// the production paths (unit tests, the selftest subcommand, benchmarks).
namespace hahn::reference {

/// Plain rational Gauss-Jordan to reduced row echelon form; same result
/// contract as hahn::rank_nullspace.
RankNullspace gauss_rank_nullspace(const Matrix& m, std::size_t cols);

/// Sign of an exponent computed by replacing every tail by its first
/// `depth` atoms. Returns nothing when the expansion cannot decide (the
/// leading surviving atom is not strictly below every truncated remainder).
std::optional<Sign> sign_by_tail_expansion(const Exponent& e, int depth);

/// exp(c t^g) as sum_{k<=depth} (c^k/k!) t^{k g}, computed directly from
/// factorials rather than by repeated series multiplication.
Series exp_of_monomial(const Exponent& g, const Rat& c, unsigned depth);

} // namespace hahn::reference

#endif
