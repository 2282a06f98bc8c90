#include "hahn/reference.hpp"

#include <map>

#include "hahn/errors.hpp"

namespace hahn::reference {

RankNullspace gauss_rank_nullspace(const Matrix& m, std::size_t cols) {
    Matrix a = m;
    const std::size_t rows = a.size();

    std::vector<std::size_t> pivot_cols;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols && k < rows; ++j) {
        std::size_t pr = rows;
        for (std::size_t i = k; i < rows; ++i)
            if (a[i][j] != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        std::swap(a[k], a[pr]);

        Rat inv = 1 / a[k][j];
        for (std::size_t l = 0; l < cols; ++l) a[k][l] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k || a[i][j] == 0) continue;
            Rat factor = a[i][j];
            for (std::size_t l = 0; l < cols; ++l) a[i][l] -= factor * a[k][l];
        }
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
        // RREF: pivot variable = -entry in the free column.
        for (std::size_t t = 0; t < pivot_cols.size(); ++t) x[pivot_cols[t]] = -a[t][f];
        result.kernel.push_back(normalize_to_integers(x));
    }
    return result;
}

std::optional<Sign> sign_by_tail_expansion(const Exponent& e, int depth) {
    if (!e.has_tails()) return e.sign();
    const int offset = *e.shift();

    std::map<Rat, Rat> atoms;
    for (const auto& [idx, c] : e.atoms()) atoms[idx] += c;
    for (const auto& [psi, q] : e.tails())
        for (int n = 1; n <= depth; ++n) atoms[psi + n * offset] += q;

    std::optional<Rat> remainder_start; // least point any truncated tail could reach
    for (const auto& [psi, q] : e.tails()) {
        Rat start = psi + (depth + 1) * offset;
        if (!remainder_start || start < *remainder_start) remainder_start = start;
    }

    for (const auto& [idx, c] : atoms) {
        if (c == 0) continue;
        if (idx < *remainder_start) return c > 0 ? Sign::positive : Sign::negative;
        return std::nullopt; // leading atom inside the truncated region
    }
    return std::nullopt; // everything cancelled; remainders decide
}

Series exp_of_monomial(const Exponent& g, const Rat& c, unsigned depth) {
    std::vector<Series::Term> terms;
    Rat coeff(1);
    Exponent exponent;
    terms.push_back({exponent, coeff});
    for (unsigned k = 1; k <= depth; ++k) {
        coeff = coeff * c / k;
        exponent = exponent + g;
        terms.push_back({exponent, coeff});
    }
    return Series::from_terms(std::move(terms),
                              g.scaled(Rat(static_cast<long>(depth) + 1)));
}

} // namespace hahn::reference
