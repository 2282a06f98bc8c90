#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hahn/cli.hpp"
#include "hahn/errors.hpp"
#include "hahn/eval.hpp"
#include "hahn/parser.hpp"
#include "hahn/selftest.hpp"

using namespace hahn;

namespace {
int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}
} // namespace

TEST_CASE("parse shapes") {
    ExprPtr sum = parse_expression("t^{1*e(0)} + 3/2");
    const auto* bin = std::get_if<Binary>(&sum->node);
    REQUIRE(bin);
    CHECK(bin->op == '+');
    CHECK(std::holds_alternative<Monomial>(bin->lhs->node));
    const auto* lit = std::get_if<RationalLit>(&bin->rhs->node);
    REQUIRE(lit);
    CHECK(lit->value == make_rational(3, 2));

    ExprPtr apply = parse_expression("exp(t^{1*e(0)})");
    const auto* app = std::get_if<Apply>(&apply->node);
    REQUIRE(app);
    CHECK(app->fn == "exp");

    ExprPtr mono = parse_expression("t^{2*e(0) - 1*tau(0)}");
    const auto* m = std::get_if<Monomial>(&mono->node);
    REQUIRE(m);
    REQUIRE(m->exponent.size() == 2);
    CHECK(m->exponent[0].coeff == 2);
    CHECK_FALSE(m->exponent[0].is_tail);
    CHECK(m->exponent[1].coeff == -1);
    CHECK(m->exponent[1].is_tail);
}

TEST_CASE("corpus round-trips and malformed inputs diagnose with positions") {
    CHECK(suites::parser_roundtrip().failures == 0);
    CHECK(suites::parser_corpus().size() >= 50);

    try {
        parse_expression("1 +\n* 2");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
        CHECK(!e.expected.empty());
    }
}

TEST_CASE("evaluation dispatches to the engine") {
    EvalContext plain;
    Series prod = evaluate(parse_expression("(1 + t^{1*e(0)}) * (1 - t^{1*e(0)})"), plain);
    CHECK(prod.str() == "1 - 1*t^{2*e(0)}");

    EvalContext with_spec;
    with_spec.spec = DerivationSpec::parse("case1:shift=1");
    Series d = evaluate(parse_expression("D(t^{1*e(0)})"), with_spec);
    CHECK(d.str() == "1*t^{1*e(0) - 1*e(1)}");

    CHECK(evaluate(parse_expression("exp(0)"), plain) == Series::one());

    CHECK_THROWS_AS(evaluate(parse_expression("D(1)"), plain), config_error);
    CHECK_THROWS_AS(evaluate(parse_expression("t^{1*tau(0)}"), plain), domain_error);
    Series powed = evaluate(parse_expression("t^{1*e(0)}^-2"), plain);
    CHECK(powed == Series::monomial(Exponent::atom(Rat(0), Rat(-2))));
}

TEST_CASE("cli eval matches the canonical rendering") {
    std::string out;
    CHECK(cli({"eval", "-e", "exp(t^{1*e(0)})", "--depth", "3"}, &out) == 0);
    CHECK(out == "1 + 1*t^{1*e(0)} + 1/2*t^{2*e(0)} + 1/6*t^{3*e(0)}\n");

    CHECK(cli({"eval", "-e", "exp(t^{1*e(0)})", "--depth", "3", "--json"}, &out) == 0);
    CHECK(out.find("\"guarantee\": \"4*e(0)\"") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(cli({"eval", "-e", "log("}, &out, &err) == 2);
    CHECK(err.find("column") != std::string::npos);

    CHECK(cli({"eval", "-e", "exp(1)"}, &out, &err) == 1);
    CHECK(cli({"bogus-subcommand"}, &out, &err) == 2);
    CHECK(cli({"check"}, &out, &err) == 2); // no expressions

    CHECK(cli({"find-relation", "-e", "t^{1*e(0)}", "-e", "t^{2*e(0)}", "--degree", "5",
               "--cap", "3"},
              &out, &err) == 1); // resource cap
}

TEST_CASE("cli check is byte-stable") {
    std::vector<std::string> args = {"check", "-e", "t^{-1*e(0)} + 3", "-e", "t^{-2*e(0)}"};
    std::string first, second;
    CHECK(cli(args, &first) == 0);
    CHECK(cli(args, &second) == 0);
    CHECK(first == second);
    CHECK(first.find("\"outcome\": \"certified\"") != std::string::npos);
    CHECK(first.find("\"conclusion\": \"td >= 3\"") != std::string::npos);
}

TEST_CASE("cli check reads expression files with comments") {
    std::string path = "frontend_check_input.txt";
    {
        std::ofstream f(path);
        f << "# family with an exact dependence\n";
        f << "t^{-1*e(0)} + 3\n";
        f << "\n";
        f << "2*t^{-1*e(0)} - 1 # trailing comment\n";
    }
    std::string out;
    CHECK(cli({"check", path}, &out) == 0);
    CHECK(out.find("\"outcome\": \"dependent\"") != std::string::npos);
    CHECK(out.find("2,") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli find-relation reports the square relation") {
    std::string out;
    CHECK(cli({"find-relation", "-e", "t^{1*e(0)}", "-e", "t^{2*e(0)}", "--degree", "2"},
              &out) == 0);
    CHECK(out.find("\"outcome\": \"verified_relation\"") != std::string::npos);
}
