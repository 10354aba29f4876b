// Deterministic random expressions whose domain conditions always hold:
// divisors and ln arguments are built to be bounded away from zero, tan only
// sees arguments in [-1, 1], and exp only sees bounded arguments.
#ifndef CAUCHY_TESTS_CORPUS_HPP
#define CAUCHY_TESTS_CORPUS_HPP

#include <random>
#include <vector>

#include <cauchy/expr.hpp>

namespace corpus
{

using cauchy::Expr;
using cauchy::ExprKind;
using cauchy::ExprPtr;

class Generator
{
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    ExprPtr expression(int depth)
    {
        if (depth <= 0) {
            return leaf();
        }
        switch (pick(10)) {
        case 0:
            return Expr::binary(ExprKind::add, expression(depth - 1), expression(depth - 1));
        case 1:
            return Expr::binary(ExprKind::sub, expression(depth - 1), expression(depth - 1));
        case 2:
            return Expr::binary(ExprKind::mul, expression(depth - 1), expression(depth - 1));
        case 3:
            return Expr::unary(ExprKind::neg, expression(depth - 1));
        case 4:
            return Expr::binary(ExprKind::div, expression(depth - 1), positive(depth - 1));
        case 5:
            return Expr::unary(ExprKind::exp, bounded(depth - 1));
        case 6:
            return Expr::unary(ExprKind::sin, expression(depth - 1));
        case 7:
            return Expr::unary(ExprKind::cos, expression(depth - 1));
        case 8:
            return Expr::unary(ExprKind::tan, unit(depth - 1));
        default:
            return Expr::unary(ExprKind::ln, positive(depth - 1));
        }
    }

    std::vector<ExprPtr> batch(std::size_t count, int max_depth)
    {
        std::vector<ExprPtr> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(expression(static_cast<int>(pick(static_cast<unsigned>(max_depth) + 1))));
        }
        return out;
    }

    unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }

private:
    ExprPtr leaf()
    {
        switch (pick(4)) {
        case 0:
            return Expr::integer(pick(10));
        case 1:
            return Expr::decimal(mpq_class(pick(1000), 100));
        case 2:
            return Expr::decimal(mpq_class(pick(64), 8));
        default:
            return pick(2) == 0 ? Expr::pi() : Expr::integer(1 + pick(3));
        }
    }

    // Value in [-1, 1].
    ExprPtr unit(int depth)
    {
        const ExprKind k = pick(2) == 0 ? ExprKind::sin : ExprKind::cos;
        return Expr::unary(k, expression(depth));
    }

    // Value of modest magnitude, for exp.
    ExprPtr bounded(int depth)
    {
        if (pick(3) == 0) {
            return Expr::decimal(mpq_class(pick(40), 10));
        }
        ExprPtr u = unit(depth);
        return pick(2) == 0 ? u : Expr::binary(ExprKind::mul, Expr::integer(1 + pick(3)), u);
    }

    // Value >= 1/e, so apartness from zero is found at small precision.
    ExprPtr positive(int depth)
    {
        switch (pick(4)) {
        case 0:
            return Expr::binary(ExprKind::add, Expr::integer(2), unit(depth));
        case 1: {
            ExprPtr x = expression(depth);
            return Expr::binary(ExprKind::add, Expr::integer(1), Expr::binary(ExprKind::mul, x, x));
        }
        case 2:
            return Expr::unary(ExprKind::exp, unit(depth));
        default:
            return Expr::decimal(mpq_class(1 + pick(99), 10));
        }
    }

    std::mt19937_64 rng_;
};

} // namespace corpus

#endif
