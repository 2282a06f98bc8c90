#include <doctest.h>

#include "hahn/certificate.hpp"
#include "hahn/errors.hpp"
#include "hahn/selftest.hpp"

using namespace hahn;

namespace {
Series mono(long exp_index, long coeff = 1) {
    return Series::monomial(Exponent::atom(Rat(exp_index)), Rat(coeff));
}
Series t_pow(long k, long coeff = 1) {
    return Series::monomial(Exponent::atom(Rat(0), Rat(k)), Rat(coeff));
}
} // namespace

TEST_CASE("constant term is dropped, nothing else") {
    Series y = t_pow(-1) + Series::constant(Rat(5)) + t_pow(1);
    CHECK(drop_constant_term(y) == t_pow(-1) + t_pow(1));
    CHECK(drop_constant_term(Series::constant(Rat(7))).is_zero());
    CHECK(drop_constant_term(t_pow(2)) == t_pow(2));
}

TEST_CASE("series rank") {
    auto independent = series_rank({t_pow(-1), t_pow(-2)});
    CHECK(independent.rank == 2);
    CHECK(independent.kernel.empty());

    auto dependent = series_rank({t_pow(-1), t_pow(-1, 2)});
    CHECK(dependent.rank == 1);
    REQUIRE(dependent.kernel.size() == 1);
    CHECK(dependent.kernel[0] == std::vector<Rat>{Rat(2), Rat(-1)});

    auto zero = series_rank({Series::zero()});
    CHECK(zero.rank == 0);
    REQUIRE(zero.kernel.size() == 1);
    CHECK(zero.kernel[0] == std::vector<Rat>{Rat(1)});

    CHECK_THROWS_AS(series_rank({}), usage_error);
}

TEST_CASE("certified family") {
    Certificate cert =
        certify_independence({t_pow(-1) + Series::constant(Rat(3)), t_pow(-2)});
    CHECK(cert.outcome == Certificate::Outcome::certified);
    CHECK(cert.rank == 2);
    REQUIRE(cert.conclusion);
    CHECK(*cert.conclusion == "td >= 3");
    CHECK_FALSE(cert.witness);
    CHECK_FALSE(cert.trusted_region);
}

TEST_CASE("dependent family with witness") {
    Certificate cert = certify_independence(
        {t_pow(-1) + Series::constant(Rat(3)), t_pow(-1, 2) - Series::constant(Rat(1))});
    CHECK(cert.outcome == Certificate::Outcome::dependent);
    CHECK(cert.rank == 1);
    REQUIRE(cert.witness);
    CHECK(*cert.witness == std::vector<Rat>{Rat(2), Rat(-1)});

    Certificate constant = certify_independence({Series::constant(Rat(5))});
    CHECK(constant.outcome == Certificate::Outcome::dependent);
    REQUIRE(constant.witness);
    CHECK(*constant.witness == std::vector<Rat>{Rat(1)});
}

TEST_CASE("jets with deficient trusted rank are inconclusive") {
    Series jet_a = Series::from_terms({{Exponent::atom(Rat(0)), Rat(1)}},
                                      Exponent::atom(Rat(0), Rat(2)));
    Series jet_b = Series::from_terms({{Exponent::atom(Rat(0)), Rat(2)}},
                                      Exponent::atom(Rat(0), Rat(2)));
    Certificate cert = certify_independence({jet_a, jet_b});
    CHECK(cert.outcome == Certificate::Outcome::inconclusive);
    CHECK_FALSE(cert.witness);
    REQUIRE(cert.trusted_region);
    CHECK(*cert.trusted_region == Exponent::atom(Rat(0), Rat(2)));

    // same coefficients but exact inputs: a genuine dependence
    Certificate exact = certify_independence({t_pow(1), t_pow(1, 2)});
    CHECK(exact.outcome == Certificate::Outcome::dependent);
}

TEST_CASE("constant combination check") {
    auto holds = check_constant_combination(
        {t_pow(1) + Series::constant(Rat(1)), -t_pow(1) + Series::constant(Rat(2))},
        {Rat(1), Rat(1)});
    CHECK(holds.holds);
    CHECK_FALSE(holds.vacuous);

    auto zero = check_constant_combination({t_pow(1)}, {Rat(0)});
    CHECK(zero.holds);
    CHECK_FALSE(zero.vacuous);

    auto vac = check_constant_combination({t_pow(-1), t_pow(1)}, {Rat(1), Rat(1)});
    CHECK(vac.holds);
    CHECK(vac.vacuous);

    CHECK_THROWS_AS(check_constant_combination({t_pow(1)}, {Rat(1), Rat(2)}), usage_error);
}

TEST_CASE("engineered constant combinations always verify") {
    CHECK(suites::constant_combination_families(120, 50).failures == 0);
}

TEST_CASE("classification is invariant under nonzero scaling") {
    CHECK(suites::certificate_scaling_invariance(60, 51).failures == 0);
}

TEST_CASE("monomial families consistent between certificate and relation search") {
    CHECK(suites::relation_schanuel_consistency(40, 52).failures == 0);
}

TEST_CASE("distinct negative monomials of any size certify") {
    std::vector<Series> ys;
    for (long k = 1; k <= 5; ++k) ys.push_back(mono(-k) + Series::constant(Rat(k)));
    Certificate cert = certify_independence(ys);
    CHECK(cert.outcome == Certificate::Outcome::certified);
    REQUIRE(cert.conclusion);
    CHECK(*cert.conclusion == "td >= 6");
}
