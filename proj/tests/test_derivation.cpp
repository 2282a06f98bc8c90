#include <doctest.h>

#include "hahn/derivation.hpp"
#include "hahn/errors.hpp"
#include "hahn/selftest.hpp"
#include "hahn/translog.hpp"

using namespace hahn;

namespace {
const ShiftMap kShift1{1};

Exponent e(long index, long num = 1, long den = 1) {
    return Exponent::atom(Rat(index), make_rational(num, den));
}
} // namespace

TEST_CASE("case1 monomials") {
    auto spec = DerivationSpec::case1(kShift1);
    CHECK(monomial_derivative(spec, e(0)) == Series::monomial(e(0) - e(1)));

    // strong Leibniz expansion for g = 2*e(0) + 3*e(1)
    Exponent g = e(0, 2) + e(1, 3);
    Series got = monomial_derivative(spec, g);
    Series expected =
        Series::monomial(g - e(1), Rat(2)) + Series::monomial(g - e(2), Rat(3));
    CHECK(got == expected);

    // cross-check against the Leibniz rule on the factor monomials
    Series a = Series::monomial(e(0, 2)), b = Series::monomial(e(1, 3));
    CHECK(got == a * monomial_derivative(spec, e(1, 3)) + b * monomial_derivative(spec, e(0, 2)));
}

TEST_CASE("el monomials produce tail exponents") {
    auto spec = DerivationSpec::el(kShift1);
    CHECK(monomial_derivative(spec, e(0)) ==
          Series::monomial(e(0) - Exponent::tail(Rat(0), kShift1)));

    CHECK(derive(spec, Series::monomial(e(1, -1))) ==
          Series::monomial(e(1, -1) - Exponent::tail(Rat(1), kShift1), Rat(-1)));
}

TEST_CASE("case2 monomials") {
    auto max_spec = DerivationSpec::case2_max(Embedding::affine(Rat(1), Rat(0)), Rat(10));
    // h(phi) = f(phi) * e(phiM)
    CHECK(monomial_derivative(max_spec, e(3)) ==
          Series::monomial(e(3) + Exponent::atom(Rat(10), Rat(3))));
    CHECK_THROWS_AS(monomial_derivative(max_spec, e(11)), config_error);

    auto cof_spec = DerivationSpec::case2_cofinal(Embedding::affine(Rat(1), Rat(1)),
                                                  CofinalSequence::powers_of_two());
    // phi = 3 lies in [2, 4), so the shift lands on e(4) with weight f(3) = 4
    CHECK(monomial_derivative(cof_spec, e(3)) ==
          Series::monomial(e(3) + Exponent::atom(Rat(4), Rat(4))));
    // phi = 1 in [1, 2)
    CHECK(monomial_derivative(cof_spec, e(1)) ==
          Series::monomial(e(1) + Exponent::atom(Rat(2), Rat(2))));
    CHECK_THROWS_AS(monomial_derivative(cof_spec, e(0)), config_error);
}

TEST_CASE("strong linearity") {
    auto spec = DerivationSpec::case1(kShift1);
    CHECK(derive(spec, Series::one() + Series::monomial(e(0))) ==
          Series::monomial(e(0) - e(1)));
    CHECK(derive(spec, Series::constant(make_rational(-7, 2))).is_zero());
    CHECK(derive(DerivationSpec::el(kShift1), Series::constant(Rat(4))).is_zero());
}

TEST_CASE("tail-bearing exponents are rejected in every mode") {
    Exponent g = e(0) + Exponent::tail(Rat(0), kShift1);
    CHECK_THROWS_AS(monomial_derivative(DerivationSpec::case1(kShift1), g), domain_error);
    CHECK_THROWS_AS(monomial_derivative(DerivationSpec::el(kShift1), g), domain_error);
    CHECK_THROWS_AS(
        monomial_derivative(
            DerivationSpec::case2_max(Embedding::affine(Rat(1), Rat(0)), Rat(10)), g),
        domain_error);
}

TEST_CASE("embedding tables") {
    auto f = Embedding::table({{Rat(0), Rat(1)}, {Rat(2), Rat(5)}});
    CHECK(f(Rat(2)) == 5);
    CHECK_THROWS_AS(f(Rat(1)), config_error);
    CHECK_THROWS_AS(Embedding::table({{Rat(0), Rat(3)}, {Rat(1), Rat(2)}}), config_error);
    CHECK_THROWS_AS(Embedding::affine(Rat(0), Rat(1)), config_error);

    auto spec = DerivationSpec::case2_max(f, Rat(2));
    CHECK(monomial_derivative(spec, e(0)) == Series::monomial(e(0) + e(2)));
}

TEST_CASE("cofinal embedding must be positive") {
    auto spec = DerivationSpec::case2_cofinal(Embedding::affine(Rat(1), Rat(-5)),
                                              CofinalSequence::powers_of_two());
    CHECK_THROWS_AS(monomial_derivative(spec, e(2)), config_error);
}

TEST_CASE("spec parsing round-trips") {
    for (const char* text :
         {"case1:shift=1", "case2max:f=affine(1,0),phiM=10",
          "case2cof:f=affine(1,1),seq=powers2", "el:shift=1",
          "case2max:f=table(0:1,2:5),phiM=3", "case2cof:f=affine(2,1),seq=list(1,3,9)"}) {
        CHECK(DerivationSpec::parse(text).str() == text);
    }
    CHECK_THROWS_AS(DerivationSpec::parse("case1"), config_error);
    CHECK_THROWS_AS(DerivationSpec::parse("case1:shift=0"), config_error);
    CHECK_THROWS_AS(DerivationSpec::parse("bogus:shift=1"), config_error);
    CHECK_THROWS_AS(DerivationSpec::parse("case2max:f=affine(1,0)"), config_error);
    CHECK_THROWS_AS(DerivationSpec::parse("case2cof:f=affine(1,1),seq=list(3,1)"), config_error);
}

TEST_CASE("leibniz and exp-compatibility on random series") {
    for (const char* text : {"case1:shift=2", "case2max:f=affine(1,0),phiM=10",
                             "case2cof:f=affine(1,1),seq=powers2", "el:shift=1"}) {
        auto spec = DerivationSpec::parse(text);
        CHECK(suites::leibniz(spec, 60, 31).failures == 0);
        CHECK(suites::exp_compatibility(spec, 20, 6, 32).failures == 0);
    }
}

TEST_CASE("el logarithmic derivative is exact") {
    CHECK(suites::el_log_derivative(kShift1, 40, 33).failures == 0);
    CHECK(suites::el_log_derivative(ShiftMap{3}, 40, 34).failures == 0);
}

TEST_CASE("jet bounds shift conservatively") {
    auto spec = DerivationSpec::case1(kShift1);
    Series jet = Series::from_terms({{e(0), Rat(1)}}, e(0, 5));
    Series d = derive(spec, jet);
    REQUIRE(d.guarantee());
    // bound moves by the least h-shift among stored terms: -e(1)
    CHECK(*d.guarantee() == e(0, 5) - e(1));

    // kernel of the derivation on representable inputs: constants only
    Series nonconstant = Series::monomial(e(2), Rat(3)) + Series::constant(Rat(1));
    CHECK_FALSE(derive(spec, nonconstant).is_structurally_zero());
}
