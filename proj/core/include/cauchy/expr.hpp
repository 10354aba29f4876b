#ifndef CAUCHY_EXPR_HPP
#define CAUCHY_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cauchy/error.hpp"

namespace cauchy
{

enum class ExprKind { int_lit, dec_lit, pi, add, sub, neg, mul, div, exp, sin, cos, tan, ln };

std::string_view to_string(ExprKind kind);

/// Half-open byte range [begin, end) in the source text.
struct Span
{
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Closed real expression. Literals hold their exact rational value: a decimal
/// such as 0.1 is the rational 1/10, never a binary approximation.
class Expr
{
public:
    static ExprPtr integer(const mpz_class &value, Span span = {});
    /// value must be a non-negative rational whose denominator divides a power of ten.
    static ExprPtr decimal(const mpq_class &value, Span span = {});
    static ExprPtr pi(Span span = {});
    static ExprPtr unary(ExprKind kind, ExprPtr arg, Span span = {});
    static ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, Span span = {});

    ExprKind kind() const { return kind_; }
    const Span &span() const { return span_; }
    /// Exact literal value; zero for non-literals.
    const mpq_class &value() const { return value_; }
    const std::vector<ExprPtr> &args() const { return args_; }
    const Expr &arg(std::size_t i) const { return *args_.at(i); }

    bool is_literal() const { return kind_ == ExprKind::int_lit || kind_ == ExprKind::dec_lit; }
    std::size_t depth() const;

private:
    Expr(ExprKind kind, Span span) : kind_(kind), span_(span) {}

    ExprKind kind_;
    Span span_;
    mpq_class value_{0};
    std::vector<ExprPtr> args_;
};

/// Same tree shape, kinds and literal values; spans are ignored.
bool structurally_equal(const Expr &a, const Expr &b);

enum class Relation { less, greater };

std::string_view to_string(Relation rel);

struct Query
{
    ExprPtr lhs;
    Relation relation = Relation::less;
    ExprPtr rhs;
};

/// Raised for <=, >= and =: such goals never terminate under semi-decision,
/// so only strict inequalities are accepted.
class RelationUnsupported : public ParseError
{
public:
    using ParseError::ParseError;
};

using Parsed = std::variant<Query, ExprPtr>;

/// Parses either a bare expression or a strict inequality.
Parsed parse(std::string_view text);
ExprPtr parse_expression(std::string_view text);
Query parse_query(std::string_view text);

/// Infix rendering with minimal parentheses; parse(print(e)) is structurally equal to e.
std::string print(const Expr &e);
std::string print(const Query &q);

/// Fully bracketed prefix form, e.g. (sub (exp pi) pi). Used for golden fixtures.
std::string to_sexpr(const Expr &e);
std::string to_sexpr(const Query &q);

} // namespace cauchy

#endif
