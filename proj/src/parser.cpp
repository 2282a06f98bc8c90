#include "hahn/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hahn/errors.hpp"

namespace hahn {

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbrace, rbrace, end };

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= in_.size()) {
                out.push_back({Tok::end, "", line, col});
                return out;
            }
            char c = in_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string text;
                while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_])))
                    text.push_back(take());
                out.push_back({Tok::number, std::move(text), line, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string text;
                while (pos_ < in_.size() &&
                       (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_'))
                    text.push_back(take());
                out.push_back({Tok::ident, std::move(text), line, col});
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::plus; break;
                case '-': kind = Tok::minus; break;
                case '*': kind = Tok::star; break;
                case '/': kind = Tok::slash; break;
                case '^': kind = Tok::caret; break;
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case '{': kind = Tok::lbrace; break;
                case '}': kind = Tok::rbrace; break;
                default:
                    throw parse_error(std::string("unexpected character '") + c + "'", line, col,
                                      "number, identifier, or operator");
            }
            take();
            out.push_back({kind, std::string(1, c), line, col});
        }
    }

private:
    char take() {
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (pos_ < in_.size() &&
               std::isspace(static_cast<unsigned char>(in_[pos_])))
            take();
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Tok::end, "end of input");
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool match(Tok k) {
        if (peek().kind == k) {
            advance();
            return true;
        }
        return false;
    }
    const Token& expect(Tok k, const std::string& expected) {
        if (peek().kind != k) fail(expected);
        return advance();
    }
    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::ostringstream msg;
        msg << "syntax error at line " << t.line << ", column " << t.column << ": expected "
            << expected << ", got " << tok_name(t.kind);
        if (!t.text.empty() && t.kind != Tok::end) msg << " '" << t.text << "'";
        throw parse_error(msg.str(), t.line, t.column, expected);
    }

    // rational := number ('/' number)?   (merged here so spacing is irrelevant)
    Rat rational() {
        const Token& n = expect(Tok::number, "number");
        Int num(n.text);
        if (peek().kind == Tok::slash && peek(1).kind == Tok::number) {
            advance();
            const Token& d = advance();
            Int den(d.text);
            if (den == 0)
                throw parse_error("zero denominator", d.line, d.column, "nonzero integer");
            return make_rational(num, den);
        }
        return Rat(num);
    }

    Rat signed_rational() {
        bool neg = match(Tok::minus);
        Rat r = rational();
        return neg ? Rat(-r) : r;
    }

    ExprPtr expr() {
        ExprPtr first;
        if (peek().kind == Tok::minus) {
            const Token& m = advance();
            ExprPtr operand = term();
            if (const auto* lit = std::get_if<RationalLit>(&operand->node))
                first = make_expr({RationalLit{-lit->value}, m.line, m.column});
            else
                first = make_expr({Negate{operand}, m.line, m.column});
        } else {
            first = term();
        }
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            char op = advance().text[0];
            ExprPtr rhs = term();
            first = make_expr({Binary{op, first, rhs}, first->line, first->column});
        }
        return first;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            char op = advance().text[0];
            ExprPtr rhs = factor();
            e = make_expr({Binary{op, e, rhs}, e->line, e->column});
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (peek().kind == Tok::caret) {
            advance();
            bool neg = match(Tok::minus);
            const Token& n = expect(Tok::number, "integer power");
            long p = 0;
            try {
                p = std::stol(n.text);
            } catch (const std::exception&) {
                throw parse_error("integer power out of range", n.line, n.column, "small integer");
            }
            return make_expr({Power{base, neg ? -p : p}, base->line, base->column});
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            Rat r = rational();
            return make_expr({RationalLit{std::move(r)}, t.line, t.column});
        }
        if (t.kind == Tok::lparen) {
            advance();
            ExprPtr inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind == Tok::ident) {
            if (t.text == "t") {
                advance();
                expect(Tok::caret, "'^' after 't'");
                expect(Tok::lbrace, "'{'");
                Monomial m{exponent_sum()};
                expect(Tok::rbrace, "'}'");
                return make_expr({std::move(m), t.line, t.column});
            }
            if (t.text == "exp" || t.text == "log" || t.text == "inv" || t.text == "D") {
                advance();
                expect(Tok::lparen, "'(' after function name");
                ExprPtr arg = expr();
                expect(Tok::rparen, "')'");
                return make_expr({Apply{t.text, arg}, t.line, t.column});
            }
            fail("'t', 'exp', 'log', 'inv', or 'D'");
        }
        fail("number, 't', '(', or function name");
    }

    // exponent := '0' | ['-'] eterm (('+'|'-') eterm)*
    std::vector<ExponentTerm> exponent_sum() {
        std::vector<ExponentTerm> terms;
        if (peek().kind == Tok::number && peek().text == "0" && peek(1).kind == Tok::rbrace) {
            advance();
            return terms;
        }
        bool neg = match(Tok::minus);
        terms.push_back(exponent_term(neg));
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool minus = advance().text[0] == '-';
            terms.push_back(exponent_term(minus));
        }
        canonicalize(terms);
        return terms;
    }

    // eterm := [rational '*'] ('e'|'tau') '(' ['-'] rational ')'
    ExponentTerm exponent_term(bool negated) {
        ExponentTerm out;
        out.coeff = 1;
        if (peek().kind == Tok::number) {
            out.coeff = rational();
            expect(Tok::star, "'*' between coefficient and basis element");
        }
        const Token& id = expect(Tok::ident, "'e' or 'tau'");
        if (id.text == "e")
            out.is_tail = false;
        else if (id.text == "tau")
            out.is_tail = true;
        else
            throw parse_error("unknown exponent basis '" + id.text + "' at line " +
                                  std::to_string(id.line) + ", column " + std::to_string(id.column),
                              id.line, id.column, "'e' or 'tau'");
        expect(Tok::lparen, "'('");
        out.index = signed_rational();
        expect(Tok::rparen, "')'");
        if (negated) out.coeff = -out.coeff;
        return out;
    }

    static void canonicalize(std::vector<ExponentTerm>& terms) {
        std::sort(terms.begin(), terms.end(), [](const ExponentTerm& a, const ExponentTerm& b) {
            if (a.index != b.index) return a.index < b.index;
            return a.is_tail < b.is_tail;
        });
        std::vector<ExponentTerm> merged;
        for (auto& t : terms) {
            if (!merged.empty() && merged.back().index == t.index &&
                merged.back().is_tail == t.is_tail)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const ExponentTerm& t) { return t.coeff == 0; });
        terms = std::move(merged);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expression(std::string_view input) {
    Lexer lexer(input);
    Parser parser(lexer.run());
    return parser.parse();
}

// --- printing and structural equality ---

namespace {

enum class Ctx { top, addend, factor, factor_rhs, power_base };

void print_node(std::ostream& out, const ExprPtr& e, Ctx ctx);

bool needs_parens(const Expr& e, Ctx ctx) {
    switch (ctx) {
        case Ctx::top: return false;
        case Ctx::addend:
            if (const auto* b = std::get_if<Binary>(&e.node))
                return b->op == '+' || b->op == '-';
            return std::holds_alternative<Negate>(e.node);
        case Ctx::factor:
            if (const auto* b = std::get_if<Binary>(&e.node))
                return b->op == '+' || b->op == '-';
            return std::holds_alternative<Negate>(e.node);
        case Ctx::factor_rhs:
            return std::holds_alternative<Binary>(e.node) ||
                   std::holds_alternative<Negate>(e.node);
        case Ctx::power_base:
            return !(std::holds_alternative<RationalLit>(e.node) ||
                     std::holds_alternative<Monomial>(e.node) ||
                     std::holds_alternative<Apply>(e.node));
    }
    return true;
}

void print_exponent_terms(std::ostream& out, const std::vector<ExponentTerm>& terms) {
    if (terms.empty()) {
        out << '0';
        return;
    }
    bool first = true;
    for (const auto& t : terms) {
        Rat c = t.coeff;
        if (first) {
            first = false;
        } else {
            out << (c > 0 ? " + " : " - ");
            c = abs(c);
        }
        out << to_string(c) << '*' << (t.is_tail ? "tau(" : "e(") << to_string(t.index) << ')';
    }
}

void print_node(std::ostream& out, const ExprPtr& e, Ctx ctx) {
    bool parens = needs_parens(*e, ctx);
    if (parens) out << '(';
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, RationalLit>) {
                out << to_string(node.value);
            } else if constexpr (std::is_same_v<T, Monomial>) {
                out << "t^{";
                print_exponent_terms(out, node.exponent);
                out << '}';
            } else if constexpr (std::is_same_v<T, Negate>) {
                out << '-';
                print_node(out, node.operand, Ctx::factor);
            } else if constexpr (std::is_same_v<T, Binary>) {
                if (node.op == '+' || node.op == '-') {
                    print_node(out, node.lhs, Ctx::top);
                    out << ' ' << node.op << ' ';
                    print_node(out, node.rhs, Ctx::addend);
                } else {
                    print_node(out, node.lhs, Ctx::factor);
                    out << node.op;
                    print_node(out, node.rhs, Ctx::factor_rhs);
                }
            } else if constexpr (std::is_same_v<T, Power>) {
                print_node(out, node.base, Ctx::power_base);
                out << '^' << node.exponent;
            } else if constexpr (std::is_same_v<T, Apply>) {
                out << node.fn << '(';
                print_node(out, node.arg, Ctx::top);
                out << ')';
            }
        },
        e->node);
    if (parens) out << ')';
}

} // namespace

std::string print_expr(const ExprPtr& e) {
    std::ostringstream out;
    print_node(out, e, Ctx::top);
    return out.str();
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& na) {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, RationalLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, Monomial>) {
                return na.exponent == nb.exponent;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return structurally_equal(na.operand, nb.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return na.op == nb.op && structurally_equal(na.lhs, nb.lhs) &&
                       structurally_equal(na.rhs, nb.rhs);
            } else if constexpr (std::is_same_v<T, Power>) {
                return na.exponent == nb.exponent && structurally_equal(na.base, nb.base);
            } else if constexpr (std::is_same_v<T, Apply>) {
                return na.fn == nb.fn && structurally_equal(na.arg, nb.arg);
            }
        },
        a->node);
}

} // namespace hahn
