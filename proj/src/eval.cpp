#include "hahn/eval.hpp"

#include "hahn/errors.hpp"
#include "hahn/translog.hpp"

namespace hahn {

namespace {

std::string at(const Expr& e) {
    return " (at line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ")";
}

Series eval_monomial(const Expr& e, const Monomial& m, const EvalContext& ctx) {
    std::vector<Exponent::Entry> atoms, tails;
    bool any_tail = false;
    for (const auto& t : m.exponent) {
        if (t.is_tail) {
            any_tail = true;
            tails.emplace_back(t.index, t.coeff);
        } else {
            atoms.emplace_back(t.index, t.coeff);
        }
    }
    std::optional<int> offset;
    if (any_tail) {
        auto sigma = ctx.spec ? ctx.spec->shift() : std::nullopt;
        if (!sigma)
            throw domain_error("tau(...) needs a shift-based derivation spec "
                               "(case1:shift=k or el:shift=k)" +
                               at(e));
        offset = sigma->offset;
    }
    return Series::monomial(Exponent::make(std::move(atoms), std::move(tails), offset));
}

} // namespace

Series evaluate(const ExprPtr& e, const EvalContext& ctx) {
    return std::visit(
        [&](const auto& node) -> Series {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, RationalLit>) {
                return Series::constant(node.value);
            } else if constexpr (std::is_same_v<T, Monomial>) {
                return eval_monomial(*e, node, ctx);
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -evaluate(node.operand, ctx);
            } else if constexpr (std::is_same_v<T, Binary>) {
                Series lhs = evaluate(node.lhs, ctx);
                Series rhs = evaluate(node.rhs, ctx);
                switch (node.op) {
                    case '+': return lhs + rhs;
                    case '-': return lhs - rhs;
                    case '*': return lhs * rhs;
                    default: return lhs * inverse(rhs, ctx.depth);
                }
            } else if constexpr (std::is_same_v<T, Power>) {
                Series base = evaluate(node.base, ctx);
                if (node.exponent >= 0) return base.pow(static_cast<unsigned>(node.exponent));
                return inverse(base, ctx.depth).pow(static_cast<unsigned>(-node.exponent));
            } else if constexpr (std::is_same_v<T, Apply>) {
                Series arg = evaluate(node.arg, ctx);
                try {
                    if (node.fn == "exp") return exp_series(arg, ctx.depth);
                    if (node.fn == "log")
                        return log_series(arg, ctx.depth,
                                          ctx.spec ? ctx.spec->shift() : std::nullopt);
                    if (node.fn == "inv") return inverse(arg, ctx.depth);
                    // "D"
                    if (!ctx.spec)
                        throw config_error("D(...) needs a derivation spec (--spec ...)");
                    return derive(*ctx.spec, arg);
                } catch (const parse_error&) {
                    throw;
                } catch (const config_error& err) {
                    throw config_error(err.what() + at(*e));
                } catch (const domain_error& err) {
                    throw domain_error(err.what() + at(*e));
                }
            }
        },
        e->node);
}

} // namespace hahn
