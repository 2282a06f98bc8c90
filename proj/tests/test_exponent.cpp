#include <doctest.h>

#include "hahn/errors.hpp"
#include "hahn/exponent.hpp"
#include "hahn/reference.hpp"
#include "hahn/selftest.hpp"

using namespace hahn;

namespace {
const ShiftMap kShift1{1};
const ShiftMap kShift2{2};

Exponent e(long index, long num = 1, long den = 1) {
    return Exponent::atom(Rat(index), make_rational(num, den));
}
Exponent tau(long index, const ShiftMap& s = kShift1, long coeff = 1) {
    return Exponent::tail(Rat(index), s, Rat(coeff));
}
} // namespace

TEST_CASE("group operations") {
    CHECK((e(0) + e(0, -1)).is_structurally_zero());

    Exponent sum = (e(0, 2) + e(1, 3)) + e(1);
    CHECK(sum == e(0, 2) + e(1, 4));

    // cancellation on the tail basis
    Exponent mixed = (e(0) - tau(0)) + tau(0);
    CHECK(mixed == e(0));
    CHECK_FALSE(mixed.has_tails());
}

TEST_CASE("sign with tails") {
    CHECK(tau(0).sign() == Sign::positive);
    // tau(-1) = e(0) + e(1) + ..., so e(0) - tau(-1) = -e(1) - e(2) - ...
    CHECK((e(0) - tau(-1)).sign() == Sign::negative);
    CHECK(Exponent{}.sign() == Sign::zero);

    // depth-3 expansion oracle agrees on both
    CHECK(*reference::sign_by_tail_expansion(tau(0), 3) == Sign::positive);
    CHECK(*reference::sign_by_tail_expansion(e(0) - tau(-1), 3) == Sign::negative);
}

TEST_CASE("comparison") {
    // tau(0) - e(1) = e(2) + e(3) + ... > 0
    CHECK(e(1) < tau(0));
    CHECK(*reference::sign_by_tail_expansion(tau(0) - e(1), 3) == Sign::positive);

    // smaller index dominates
    CHECK(e(0) > e(1));
    CHECK(e(0).compare(e(0)) == std::strong_ordering::equal);
}

TEST_CASE("mode mismatch is rejected") {
    CHECK_THROWS_AS((void)(tau(0, kShift1) + tau(0, kShift2)), config_error);
    CHECK_THROWS_AS((void)tau(0, kShift1).compare(tau(4, kShift2)), config_error);
    CHECK_THROWS_AS((void)Exponent::tail(make_rational(1, 2), kShift1), config_error);
}

TEST_CASE("tail unfolding") {
    auto [atom, rest] = tail_unfold(Rat(0), kShift1);
    CHECK(atom == e(1));
    CHECK(rest == tau(1));
    CHECK(atom + rest == tau(0));

    auto [atom2, rest2] = tail_unfold(Rat(5), kShift2);
    CHECK(atom2 == Exponent::atom(Rat(7)));
    CHECK(rest2 == Exponent::tail(Rat(7), kShift2));

    // two unfoldings: tau(0) = e(1) + e(2) + tau(2)
    CHECK(e(1) + e(2) + Exponent::tail(Rat(2), kShift1) == tau(0));

    CHECK_THROWS_AS(tail_unfold(make_rational(1, 2), kShift1), config_error);
}

TEST_CASE("aliasing between bases compares equal") {
    // tau(0) - tau(1) covers exactly e(1)
    CHECK(tau(0) - tau(1) == e(1));
}

TEST_CASE("rendering") {
    CHECK(Exponent{}.str() == "0");
    CHECK((e(0, 2) - tau(0)).str() == "2*e(0) - 1*tau(0)");
    CHECK((e(1, -3, 2) + e(5)).str() == "-3/2*e(1) + 1*e(5)");
    CHECK(Exponent::atom(make_rational(1, 2)).str() == "1*e(1/2)");
}

TEST_CASE("order properties on random triples") {
    auto r = suites::exponent_order(200, 7);
    CHECK(r.failures == 0);
}

TEST_CASE("sign agrees with the expansion oracle when decisive") {
    auto r = suites::sign_oracle_agreement(200, 5, 8);
    CHECK(r.failures == 0);
    CHECK(r.total > 50); // the oracle must actually decide often enough
}
