#include "hahn/relation.hpp"

#include <algorithm>

#include "hahn/errors.hpp"
#include "hahn/linalg.hpp"

namespace hahn {

std::vector<std::vector<unsigned>> enumerate_monomials(std::size_t count, unsigned degree) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current(count, 0);

    // All tuples of the given total degree, lexicographically descending.
    auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == count) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    for (unsigned d = 0; d <= degree; ++d) fill(fill, 0, d);
    return out;
}

std::vector<Series> expand_monomials(const std::vector<Series>& ws,
                                     const std::vector<std::vector<unsigned>>& tuples,
                                     bool parallel) {
    unsigned max_power = 0;
    for (const auto& t : tuples)
        for (unsigned e : t) max_power = std::max(max_power, e);

    // powers[j][k] = ws[j]^k
    std::vector<std::vector<Series>> powers(ws.size());
    for (std::size_t j = 0; j < ws.size(); ++j) {
        powers[j].reserve(max_power + 1);
        powers[j].push_back(Series::one());
        for (unsigned k = 1; k <= max_power; ++k)
            powers[j].push_back(powers[j].back() * ws[j]);
    }

    std::vector<Series> expanded(tuples.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(tuples.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        Series prod = Series::one();
        const auto& tuple = tuples[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < tuple.size(); ++j)
            if (tuple[j] > 0) prod = prod * powers[j][tuple[j]];
        expanded[static_cast<std::size_t>(i)] = std::move(prod);
    }
    return expanded;
}

RelationReport find_relation(const std::vector<Series>& ws, unsigned degree,
                             std::size_t monomial_cap, bool parallel) {
    if (ws.empty()) throw usage_error("relation search needs at least one series");
    if (degree < 1) throw usage_error("relation search needs degree >= 1");

    // binomial(count + degree, degree)
    Int count(1);
    for (unsigned i = 1; i <= degree; ++i) {
        count *= Int(ws.size() + i);
        count /= i;
    }
    if (count > Int(static_cast<unsigned long>(monomial_cap)))
        throw resource_error("monomial count " + count.str() + " exceeds the cap " +
                             std::to_string(monomial_cap) + "; raise --cap to override");

    RelationReport report;
    report.degree_bound = degree;
    report.monomials = enumerate_monomials(ws.size(), degree);
    report.monomial_count = report.monomials.size();

    std::vector<Series> expanded = expand_monomials(ws, report.monomials, parallel);
    TrustedMatrix m = build_trusted_matrix(expanded);
    RankNullspace rn = rank_nullspace(m.rows, expanded.size());

    if (rn.kernel.empty()) {
        report.outcome = RelationReport::Outcome::none_found;
        report.trusted_constraints = m.rows.size();
        return report;
    }

    const std::vector<Rat>& coeffs = rn.kernel.front();
    if (m.any_jet) {
        report.outcome = RelationReport::Outcome::candidate;
        report.coefficients = coeffs;
        report.valid_below = m.trusted_bound;
        return report;
    }

    Series combination = Series::zero();
    for (std::size_t i = 0; i < expanded.size(); ++i)
        combination = combination + expanded[i].scaled(coeffs[i]);
    if (!combination.is_structurally_zero())
        throw engine_error("internal: relation fails re-multiplication on exact inputs");

    report.outcome = RelationReport::Outcome::verified;
    report.coefficients = coeffs;
    return report;
}

} // namespace hahn
