#include "hahn/certificate.hpp"

#include "hahn/errors.hpp"

namespace hahn {

RankNullspace series_rank(const std::vector<Series>& vectors) {
    if (vectors.empty()) throw usage_error("rank of an empty series family");
    TrustedMatrix m = build_trusted_matrix(vectors);
    return rank_nullspace(m.rows, vectors.size());
}

Certificate certify_independence(const std::vector<Series>& ys) {
    if (ys.empty()) throw usage_error("independence check needs at least one series");

    Certificate cert;
    cert.inputs = ys;
    cert.shifted_inputs.reserve(ys.size());
    for (const auto& y : ys) cert.shifted_inputs.push_back(drop_constant_term(y));

    TrustedMatrix m = build_trusted_matrix(cert.shifted_inputs);
    cert.trusted_region = m.trusted_bound;
    RankNullspace rn = rank_nullspace(m.rows, cert.shifted_inputs.size());
    cert.rank = rn.rank;

    const std::size_t n = ys.size();
    if (rn.rank == n) {
        cert.outcome = Certificate::Outcome::certified;
        cert.conclusion = "td >= " + std::to_string(n + 1);
        return cert;
    }
    if (m.any_jet) {
        cert.outcome = Certificate::Outcome::inconclusive;
        cert.reason = "rank deficiency on trusted coefficients of truncated inputs; "
                      "a relation may fail at higher order";
        return cert;
    }

    cert.outcome = Certificate::Outcome::dependent;
    const std::vector<Rat>& w = rn.kernel.front();
    Series combination = Series::zero();
    for (std::size_t i = 0; i < n; ++i)
        combination = combination + cert.shifted_inputs[i].scaled(w[i]);
    if (!combination.is_structurally_zero())
        throw engine_error("internal: dependence witness fails re-verification");
    cert.witness = w;
    return cert;
}

ConstantCombinationCheck check_constant_combination(const std::vector<Series>& ys,
                                                    const std::vector<Rat>& m) {
    if (ys.size() != m.size())
        throw usage_error("coefficient vector length does not match the series family");

    ConstantCombinationCheck out;
    Series combination = Series::zero();
    for (std::size_t i = 0; i < ys.size(); ++i)
        combination = combination + ys[i].scaled(m[i]);

    Decomposition d = decompose(combination);
    if (!d.negative_part.is_structurally_zero() ||
        !d.infinitesimal_part.is_structurally_zero()) {
        out.vacuous = true;
        out.holds = true;
        return out;
    }

    Series shifted_combination = Series::zero();
    for (std::size_t i = 0; i < ys.size(); ++i)
        shifted_combination = shifted_combination + drop_constant_term(ys[i]).scaled(m[i]);
    out.holds = shifted_combination.is_structurally_zero();
    return out;
}

} // namespace hahn
