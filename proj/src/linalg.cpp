#include "hahn/linalg.hpp"

#include <algorithm>

#include "hahn/errors.hpp"

namespace hahn {

RankNullspace rank_nullspace(const Matrix& m, std::size_t cols, bool parallel) {
    Matrix a = m;
    for (const auto& row : a)
        if (row.size() != cols) throw usage_error("matrix rows must all have the given width");

    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_cols;
    Rat prev(1);
    std::size_t k = 0; // next pivot row

    for (std::size_t j = 0; j < cols && k < rows; ++j) {
        std::size_t pivot_row = rows;
        for (std::size_t i = k; i < rows; ++i) {
            if (a[i][j] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows) continue; // free column
        std::swap(a[k], a[pivot_row]);

        const Rat pivot = a[k][j];
        const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(k) + 1;
        const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(rows);
        const Rat* lead = a[k].data();
        // One Bareiss step: row[l] = (row[l]*pivot - row[j]*lead[l]) / prev.
        // Each row is updated independently; per-thread scratch keeps GMP
        // reallocation out of the inner loop.
#pragma omp parallel if (parallel && (hi - lo) * static_cast<std::ptrdiff_t>(cols - j) > 512)
        {
            Rat t1, t2;
            auto* s1 = t1.backend().data();
            auto* s2 = t2.backend().data();
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                auto& row = a[static_cast<std::size_t>(i)];
                for (std::size_t l = j + 1; l < cols; ++l) {
                    mpq_mul(s1, row[l].backend().data(), pivot.backend().data());
                    mpq_mul(s2, row[j].backend().data(), lead[l].backend().data());
                    mpq_sub(s1, s1, s2);
                    mpq_div(row[l].backend().data(), s1, prev.backend().data());
                }
                row[j] = 0;
            }
        }
        prev = pivot;
        pivot_cols.push_back(j);
        ++k;
    }

    RankNullspace result;
    result.rank = pivot_cols.size();

    std::vector<bool> is_pivot(cols, false);
    for (auto j : pivot_cols) is_pivot[j] = true;

    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (std::size_t t = pivot_cols.size(); t-- > 0;) {
            const std::size_t pc = pivot_cols[t];
            Rat sum(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (x[j] != 0) sum += a[t][j] * x[j];
            x[pc] = -sum / a[t][pc];
        }
        result.kernel.push_back(normalize_to_integers(x));
    }
    return result;
}

TrustedMatrix build_trusted_matrix(const std::vector<Series>& columns) {
    TrustedMatrix out;
    for (const auto& s : columns) {
        if (s.guarantee()) {
            out.any_jet = true;
            out.trusted_bound = min_guarantee(out.trusted_bound, s.guarantee());
        }
    }

    TermMap support; // exponent -> unused; ordered union of trusted supports
    for (const auto& s : columns)
        for (const auto& t : s.terms()) {
            if (out.trusted_bound && !(t.exponent < *out.trusted_bound)) continue;
            support.emplace(t.exponent, 0);
        }

    out.row_exponents.reserve(support.size());
    for (const auto& [g, unused] : support) out.row_exponents.push_back(g);

    out.rows.reserve(out.row_exponents.size());
    for (const auto& g : out.row_exponents) {
        std::vector<Rat> row;
        row.reserve(columns.size());
        for (const auto& s : columns) row.push_back(s.coefficient_at(g));
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace hahn
