#ifndef HAHN_PARSER_HPP
#define HAHN_PARSER_HPP

#include <string_view>

#include "hahn/ast.hpp"

namespace hahn {

/// Parses one expression:
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := atom ('^' ['-'] integer)?
///   atom     := rational | 't' '^' '{' exponent '}' | '(' expr ')'
///             | ('exp'|'log'|'inv'|'D') '(' expr ')'
///   exponent := '0' | ['-'] eterm (('+'|'-') eterm)*
///   eterm    := [rational '*'] ('e'|'tau') '(' ['-'] rational ')'
///
/// Whitespace insensitive. Throws parse_error with line/column and the
/// expected-token set on malformed input.
ExprPtr parse_expression(std::string_view input);

} // namespace hahn

#endif
