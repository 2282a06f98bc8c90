#include "hahn/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "hahn/certificate.hpp"
#include "hahn/errors.hpp"
#include "hahn/eval.hpp"
#include "hahn/json_io.hpp"
#include "hahn/parser.hpp"
#include "hahn/relation.hpp"
#include "hahn/selftest.hpp"

namespace hahn {

namespace {

struct CommonOptions {
    std::string spec_text;
    unsigned depth = 8;

    EvalContext context() const {
        EvalContext ctx;
        if (!spec_text.empty()) ctx.spec = DerivationSpec::parse(spec_text);
        ctx.depth = depth;
        return ctx;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--spec", opts.spec_text,
                    "derivation spec (case1:shift=1, case2max:f=affine(1,0),phiM=10, "
                    "case2cof:f=affine(1,1),seq=powers2, el:shift=1)");
    cmd->add_option("--depth", opts.depth, "partial-sum depth for exp/log/inv and division")
        ->check(CLI::PositiveNumber);
}

std::vector<std::string> read_expression_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto is_blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!is_blank) out.push_back(line);
    }
    return out;
}

std::vector<Series> evaluate_all(const std::vector<std::string>& exprs,
                                 const std::vector<std::string>& files,
                                 const EvalContext& ctx) {
    std::vector<std::string> texts = exprs;
    for (const auto& f : files)
        for (auto& line : read_expression_file(f)) texts.push_back(std::move(line));
    if (texts.empty()) throw usage_error("no input expressions (use -e or name a file)");

    std::vector<Series> out;
    out.reserve(texts.size());
    for (const auto& text : texts) out.push_back(evaluate(parse_expression(text), ctx));
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact generalized power series calculator with independence certificates"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
    CommonOptions eval_opts;
    std::string eval_expr;
    bool eval_json = false;
    eval_cmd->add_option("-e,--expr", eval_expr, "expression")->required();
    eval_cmd->add_flag("--json", eval_json, "emit JSON instead of the canonical rendering");
    add_common(eval_cmd, eval_opts);

    // check
    auto* check_cmd = app.add_subcommand("check", "independence certificate for a series family");
    CommonOptions check_opts;
    std::vector<std::string> check_exprs, check_files;
    check_cmd->add_option("-e,--expr", check_exprs, "expression (repeatable)");
    check_cmd->add_option("files", check_files, "expression files, one per line, # comments");
    add_common(check_cmd, check_opts);

    // find-relation
    auto* rel_cmd = app.add_subcommand("find-relation",
                                       "bounded-degree polynomial relation search");
    CommonOptions rel_opts;
    std::vector<std::string> rel_exprs, rel_files;
    unsigned rel_degree = 0;
    std::size_t rel_cap = kDefaultMonomialCap;
    rel_cmd->add_option("-e,--expr", rel_exprs, "expression (repeatable)");
    rel_cmd->add_option("files", rel_files, "expression files");
    rel_cmd->add_option("--degree", rel_degree, "total degree bound")->required();
    rel_cmd->add_option("--cap", rel_cap, "monomial count cap");
    add_common(rel_cmd, rel_opts);

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run the invariant suites");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*eval_cmd) {
            Series value = evaluate(parse_expression(eval_expr), eval_opts.context());
            if (eval_json)
                out << series_to_json(value);
            else
                out << value.str() << "\n";
            return 0;
        }
        if (*check_cmd) {
            auto ys = evaluate_all(check_exprs, check_files, check_opts.context());
            out << certificate_to_json(certify_independence(ys));
            return 0;
        }
        if (*rel_cmd) {
            auto ws = evaluate_all(rel_exprs, rel_files, rel_opts.context());
            out << relation_report_to_json(find_relation(ws, rel_degree, rel_cap));
            return 0;
        }
        if (*self_cmd) {
            int failed = suites::run_selftest(out);
            return failed == 0 ? 0 : 1;
        }
    } catch (const parse_error& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const engine_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace hahn
