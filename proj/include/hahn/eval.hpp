#ifndef HAHN_EVAL_HPP
#define HAHN_EVAL_HPP

#include <optional>

#include "hahn/ast.hpp"
#include "hahn/derivation.hpp"
#include "hahn/series.hpp"

namespace hahn {

struct EvalContext {
    std::optional<DerivationSpec> spec; // required by D; provides the shift for log/tau
    unsigned depth = 8;                 // partial-sum depth for exp/log/inv and division
};

/// Bottom-up evaluation to a series with propagated jet bounds. Engine
/// domain errors are annotated with the source position of the offending
/// subexpression.
Series evaluate(const ExprPtr& e, const EvalContext& ctx);

} // namespace hahn

#endif
