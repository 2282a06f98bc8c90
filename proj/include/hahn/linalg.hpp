#ifndef HAHN_LINALG_HPP
#define HAHN_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hahn/rational.hpp"
#include "hahn/series.hpp"

namespace hahn {

using Matrix = std::vector<std::vector<Rat>>;

struct RankNullspace {
    std::size_t rank = 0;
    /// Right-kernel basis, one vector per free column in ascending column
    /// order; entries integer, coprime, first nonzero positive.
    std::vector<std::vector<Rat>> kernel;
};

/// Rank and right kernel by fraction-free (Bareiss) elimination. Row updates
/// run in parallel when `parallel` is set; the result is identical either
/// way. `cols` fixes the width for matrices with zero rows.
RankNullspace rank_nullspace(const Matrix& m, std::size_t cols, bool parallel = true);

/// Exact coefficient matrix of a series family: rows indexed by the sorted
/// union of supports restricted to the common jet bound (when any input is
/// a jet), columns by the input series.
struct TrustedMatrix {
    Matrix rows;
    std::vector<Exponent> row_exponents;
    std::optional<Exponent> trusted_bound; // min of present jet bounds
    bool any_jet = false;
};

TrustedMatrix build_trusted_matrix(const std::vector<Series>& columns);

} // namespace hahn

#endif
