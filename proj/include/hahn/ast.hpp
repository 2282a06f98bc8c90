#ifndef HAHN_AST_HPP
#define HAHN_AST_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hahn/rational.hpp"

namespace hahn {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// One basis contribution inside a monomial exponent: coeff * e(index) or
/// coeff * tau(index).
struct ExponentTerm {
    bool is_tail = false;
    Rat coeff;
    Rat index;

    bool operator==(const ExponentTerm&) const = default;
};

struct RationalLit {
    Rat value;
};
struct Monomial {
    /// Canonicalized: sorted by (index, basis), duplicates merged, zeros
    /// dropped. Empty means t^0.
    std::vector<ExponentTerm> exponent;
};
struct Negate {
    ExprPtr operand;
};
struct Binary {
    char op; // + - * /
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Power {
    ExprPtr base;
    long exponent;
};
struct Apply {
    std::string fn; // exp | log | inv | D
    ExprPtr arg;
};

struct Expr {
    std::variant<RationalLit, Monomial, Negate, Binary, Power, Apply> node;
    int line = 1;
    int column = 1;
};

ExprPtr make_expr(Expr e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// Canonical rendering; reparses to a structurally identical tree.
std::string print_expr(const ExprPtr& e);

} // namespace hahn

#endif
