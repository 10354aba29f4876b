#include "cauchy/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace cauchy
{

std::string_view to_string(ExprKind kind)
{
    switch (kind) {
    case ExprKind::int_lit:
        return "int";
    case ExprKind::dec_lit:
        return "dec";
    case ExprKind::pi:
        return "pi";
    case ExprKind::add:
        return "add";
    case ExprKind::sub:
        return "sub";
    case ExprKind::neg:
        return "neg";
    case ExprKind::mul:
        return "mul";
    case ExprKind::div:
        return "div";
    case ExprKind::exp:
        return "exp";
    case ExprKind::sin:
        return "sin";
    case ExprKind::cos:
        return "cos";
    case ExprKind::tan:
        return "tan";
    case ExprKind::ln:
        return "ln";
    }
    return "?";
}

std::string_view to_string(Relation rel) { return rel == Relation::less ? "<" : ">"; }

namespace
{

bool is_function(ExprKind k)
{
    return k == ExprKind::exp || k == ExprKind::sin || k == ExprKind::cos || k == ExprKind::tan || k == ExprKind::ln;
}

bool is_binary(ExprKind k)
{
    return k == ExprKind::add || k == ExprKind::sub || k == ExprKind::mul || k == ExprKind::div;
}

// Denominator of the form 2^a 5^b; returns max(a, b) or -1 if it is not.
long decimal_places(const mpz_class &den)
{
    mpz_class d = den;
    long twos = 0;
    long fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        d /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        return -1;
    }
    return std::max(twos, fives);
}

} // namespace

ExprPtr Expr::integer(const mpz_class &value, Span span)
{
    if (value < 0) {
        throw std::invalid_argument("Expr::integer: literals are non-negative; use neg");
    }
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::int_lit, span));
    e->value_ = value;
    return e;
}

ExprPtr Expr::decimal(const mpq_class &value, Span span)
{
    mpq_class v = value;
    v.canonicalize();
    if (v < 0 || decimal_places(v.get_den()) < 0) {
        throw std::invalid_argument("Expr::decimal: value " + v.get_str() + " is not a non-negative decimal");
    }
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::dec_lit, span));
    e->value_ = v;
    return e;
}

ExprPtr Expr::pi(Span span) { return std::shared_ptr<Expr>(new Expr(ExprKind::pi, span)); }

ExprPtr Expr::unary(ExprKind kind, ExprPtr arg, Span span)
{
    if (kind != ExprKind::neg && !is_function(kind)) {
        throw std::invalid_argument("Expr::unary: not a unary kind");
    }
    auto e = std::shared_ptr<Expr>(new Expr(kind, span));
    e->args_.push_back(std::move(arg));
    return e;
}

ExprPtr Expr::binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, Span span)
{
    if (!is_binary(kind)) {
        throw std::invalid_argument("Expr::binary: not a binary kind");
    }
    auto e = std::shared_ptr<Expr>(new Expr(kind, span));
    e->args_.push_back(std::move(lhs));
    e->args_.push_back(std::move(rhs));
    return e;
}

std::size_t Expr::depth() const
{
    std::size_t d = 0;
    for (const auto &a : args_) {
        d = std::max(d, a->depth());
    }
    return d + 1;
}

bool structurally_equal(const Expr &a, const Expr &b)
{
    if (a.kind() != b.kind() || a.value() != b.value() || a.args().size() != b.args().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!structurally_equal(a.arg(i), b.arg(i))) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Printing

namespace
{

int precedence(ExprKind k)
{
    switch (k) {
    case ExprKind::add:
    case ExprKind::sub:
        return 1;
    case ExprKind::mul:
    case ExprKind::div:
        return 2;
    case ExprKind::neg:
        return 3;
    default:
        return 4;
    }
}

std::string decimal_text(const mpq_class &v)
{
    const long places = std::max(1L, decimal_places(v.get_den()));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    const mpz_class scaled = v.get_num() * scale / v.get_den();
    std::string digits = scaled.get_str();
    if (digits.size() <= static_cast<std::size_t>(places)) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return digits;
}

std::string wrap(const Expr &e, bool parens)
{
    std::string s = print(e);
    return parens ? "(" + s + ")" : s;
}

} // namespace

std::string print(const Expr &e)
{
    switch (e.kind()) {
    case ExprKind::int_lit:
        return e.value().get_num().get_str();
    case ExprKind::dec_lit:
        return decimal_text(e.value());
    case ExprKind::pi:
        return "pi";
    case ExprKind::neg:
        return "-" + wrap(e.arg(0), precedence(e.arg(0).kind()) < precedence(ExprKind::neg));
    case ExprKind::exp:
    case ExprKind::sin:
    case ExprKind::cos:
    case ExprKind::tan:
    case ExprKind::ln:
        return std::string(to_string(e.kind())) + "(" + print(e.arg(0)) + ")";
    case ExprKind::add:
    case ExprKind::sub:
    case ExprKind::mul:
    case ExprKind::div: {
        const int p = precedence(e.kind());
        const char *op = e.kind() == ExprKind::add   ? " + "
                         : e.kind() == ExprKind::sub ? " - "
                         : e.kind() == ExprKind::mul ? " * "
                                                     : " / ";
        return wrap(e.arg(0), precedence(e.arg(0).kind()) < p) + op + wrap(e.arg(1), precedence(e.arg(1).kind()) <= p);
    }
    }
    return "?";
}

std::string print(const Query &q) { return print(*q.lhs) + " " + std::string(to_string(q.relation)) + " " + print(*q.rhs); }

std::string to_sexpr(const Expr &e)
{
    switch (e.kind()) {
    case ExprKind::int_lit:
        return e.value().get_num().get_str();
    case ExprKind::dec_lit:
        return "(dec " + e.value().get_str() + ")";
    case ExprKind::pi:
        return "pi";
    default: {
        std::string s = "(" + std::string(to_string(e.kind()));
        for (const auto &a : e.args()) {
            s += " " + to_sexpr(*a);
        }
        return s + ")";
    }
    }
}

std::string to_sexpr(const Query &q)
{
    return "(" + std::string(to_string(q.relation)) + " " + to_sexpr(*q.lhs) + " " + to_sexpr(*q.rhs) + ")";
}

// ---------------------------------------------------------------------------
// Parsing
//
//   query   := expr ( "<" | ">" ) expr
//   expr    := term { ("+" | "-") term }
//   term    := unary { ("*" | "/") unary }
//   unary   := "-" unary | primary
//   primary := number | "pi" | func "(" expr ")" | "(" expr ")"

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Parsed parse_top()
    {
        ExprPtr lhs = parse_expr();
        skip_ws();
        if (at_end()) {
            return lhs;
        }
        const Relation rel = parse_relation();
        ExprPtr rhs = parse_expr();
        skip_ws();
        if (!at_end()) {
            if (peek() == '<' || peek() == '>' || peek() == '=') {
                throw ParseError(pos_, "chained comparisons are not supported");
            }
            unexpected();
        }
        return Query{std::move(lhs), rel, std::move(rhs)};
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void unexpected() const
    {
        if (at_end()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }

    Relation parse_relation()
    {
        const std::size_t at = pos_;
        const char c = peek();
        const char n = peek(1);
        if ((c == '<' || c == '>') && n == '=') {
            throw RelationUnsupported(at, std::string("relation '") + c +
                                              "=' is not supported: only strict inequalities (< or >) can be "
                                              "semi-decided, and equal sides never separate");
        }
        if (c == '=') {
            throw RelationUnsupported(at, "equality is not supported: equality of reals is not semi-decidable "
                                          "(the search never terminates when both sides are equal)");
        }
        if (c == '<' || c == '>') {
            ++pos_;
            return c == '<' ? Relation::less : Relation::greater;
        }
        unexpected();
    }

    ExprPtr parse_expr()
    {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr lhs = parse_term();
        while (true) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') {
                return lhs;
            }
            ++pos_;
            ExprPtr rhs = parse_term();
            lhs = Expr::binary(c == '+' ? ExprKind::add : ExprKind::sub, std::move(lhs), std::move(rhs),
                               {begin, pos_});
        }
    }

    ExprPtr parse_term()
    {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr lhs = parse_unary();
        while (true) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '/') {
                return lhs;
            }
            ++pos_;
            ExprPtr rhs = parse_unary();
            lhs = Expr::binary(c == '*' ? ExprKind::mul : ExprKind::div, std::move(lhs), std::move(rhs),
                               {begin, pos_});
        }
    }

    ExprPtr parse_unary()
    {
        skip_ws();
        if (peek() == '-') {
            const std::size_t begin = pos_++;
            ExprPtr arg = parse_unary();
            return Expr::unary(ExprKind::neg, std::move(arg), {begin, pos_});
        }
        return parse_primary();
    }

    ExprPtr parse_primary()
    {
        skip_ws();
        const std::size_t begin = pos_;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return parse_number();
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(begin, pos_ - begin);
            if (name == "pi") {
                return Expr::pi({begin, pos_});
            }
            ExprKind kind;
            if (name == "exp") {
                kind = ExprKind::exp;
            } else if (name == "sin") {
                kind = ExprKind::sin;
            } else if (name == "cos") {
                kind = ExprKind::cos;
            } else if (name == "tan") {
                kind = ExprKind::tan;
            } else if (name == "ln") {
                kind = ExprKind::ln;
            } else {
                throw ParseError(begin, "unknown identifier '" + std::string(name) + "'");
            }
            skip_ws();
            if (peek() != '(') {
                throw ParseError(pos_, "expected '(' after function name '" + std::string(name) + "'");
            }
            ++pos_;
            ExprPtr arg = parse_expr();
            expect(')');
            return Expr::unary(kind, std::move(arg), {begin, pos_});
        }
        unexpected();
    }

    ExprPtr parse_number()
    {
        const std::size_t begin = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        const std::string int_digits(text_.substr(begin, pos_ - begin));
        if (peek() != '.') {
            return Expr::integer(mpz_class(int_digits, 10), {begin, pos_});
        }
        ++pos_;
        const std::size_t frac_begin = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (pos_ == frac_begin) {
            throw ParseError(pos_, "expected digits after decimal point");
        }
        const std::string frac_digits(text_.substr(frac_begin, pos_ - frac_begin));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits.size()));
        const mpq_class value(mpz_class(int_digits + frac_digits, 10), den);
        return Expr::decimal(value, {begin, pos_});
    }

    void expect(char c)
    {
        skip_ws();
        if (peek() != c) {
            if (at_end()) {
                throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
            }
            throw ParseError(pos_, std::string("expected '") + c + "', found '" + peek() + "'");
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Parsed parse(std::string_view text) { return Parser(text).parse_top(); }

ExprPtr parse_expression(std::string_view text)
{
    Parsed p = parse(text);
    if (auto *e = std::get_if<ExprPtr>(&p)) {
        return *e;
    }
    throw ParseError(0, "expected an expression, found an inequality");
}

Query parse_query(std::string_view text)
{
    Parsed p = parse(text);
    if (auto *q = std::get_if<Query>(&p)) {
        return std::move(*q);
    }
    throw ParseError(text.size(), "expected an inequality '<' or '>'");
}

} // namespace cauchy
