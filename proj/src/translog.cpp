#include "hahn/translog.hpp"

#include "hahn/errors.hpp"

namespace hahn {

namespace {

/// Lower bound on the valuation of the true series behind a jet.
std::optional<Exponent> valuation_lower_bound(const Series& s) {
    if (s.terms().empty()) {
        if (s.guarantee()) return *s.guarantee();
        return std::nullopt; // exact zero: no finite bound needed
    }
    Exponent v = s.valuation();
    if (s.guarantee()) return min(v, *s.guarantee());
    return v;
}

} // namespace

Series exp_series(const Series& eps, unsigned depth) {
    for (const auto& t : eps.terms()) {
        switch (t.exponent.sign()) {
            case Sign::zero:
                throw domain_error("exp requires an infinitesimal: constant part " +
                                   to_string(t.coeff) + " is not zero");
            case Sign::negative:
                throw domain_error("exp requires an infinitesimal: negative-support term at t^{" +
                                   t.exponent.str() + "}");
            default: break;
        }
    }
    if (eps.guarantee() && !eps.guarantee()->is_positive())
        throw domain_error("exp requires an infinitesimal: jet bound does not exclude "
                           "constant or negative support");

    if (eps.is_zero()) return Series::one();
    if (eps.is_structurally_zero()) // jet with no stored terms
        return Series::one().with_guarantee(eps.guarantee());

    Exponent truncation = valuation_lower_bound(eps)->scaled(Rat(static_cast<long>(depth) + 1));
    Series acc = Series::one();
    Series power = Series::one();
    Rat factorial(1);
    for (unsigned k = 1; k <= depth; ++k) {
        // eps has positive support, so terms at or beyond the final bound
        // cannot feed back into trusted coefficients.
        power = (power * eps).truncated_at(truncation);
        factorial *= k;
        acc = acc + power.scaled(1 / factorial);
    }
    return acc.with_guarantee(truncation);
}

Series log_series(const Series& a, unsigned depth, std::optional<ShiftMap> sigma) {
    if (a.is_structurally_zero()) throw domain_error("log of the zero series");
    if (a.terms().front().coeff != 1)
        throw domain_error("log requires leading coefficient 1, got " +
                           to_string(a.terms().front().coeff));

    const Exponent& g0 = a.valuation();

    Series monomial_log = Series::zero();
    if (!g0.is_zero()) {
        if (!sigma)
            throw domain_error("log of a monomial requires a shift map (exponential-logarithmic "
                               "structure); none configured");
        if (g0.has_tails())
            throw domain_error("log of t^{" + g0.str() +
                               "}: tail components in the exponent are not supported");
        std::vector<Series::Term> terms;
        for (const auto& [phi, c] : g0.atoms()) {
            if (!is_integer(phi))
                throw config_error("log of a monomial requires integer index points, got " +
                                   to_string(phi));
            terms.push_back({Exponent::atom(sigma->apply(phi), Rat(-1)), Rat(-c)});
        }
        monomial_log = Series::from_terms(std::move(terms));
    }

    // a = t^g0 (1 + eps)
    std::vector<Series::Term> eps_terms;
    for (std::size_t i = 1; i < a.terms().size(); ++i)
        eps_terms.push_back({a.terms()[i].exponent - g0, a.terms()[i].coeff});
    std::optional<Exponent> eps_guarantee;
    if (a.guarantee()) eps_guarantee = *a.guarantee() - g0;
    Series eps = Series::from_terms(std::move(eps_terms), eps_guarantee);

    if (eps.is_zero()) return monomial_log;
    if (eps.is_structurally_zero()) return monomial_log.with_guarantee(eps.guarantee());

    Exponent truncation = valuation_lower_bound(eps)->scaled(Rat(static_cast<long>(depth) + 1));
    Series acc = Series::zero();
    Series power = Series::one();
    for (unsigned n = 1; n <= depth; ++n) {
        power = (power * eps).truncated_at(truncation);
        Rat c = make_rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        acc = acc + power.scaled(c);
    }
    return (monomial_log + acc).with_guarantee(truncation);
}

} // namespace hahn
