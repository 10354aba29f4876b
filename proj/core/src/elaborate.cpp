#include "cauchy/elaborate.hpp"

#include <utility>

#include "cauchy/functions.hpp"

namespace cauchy
{

namespace
{

std::string describe(ExprKind kind, const Span &span)
{
    return std::string(to_string(kind)) + " node at bytes [" + std::to_string(span.begin) + ", " +
           std::to_string(span.end) + ")";
}

ApartnessCertificate require_apart(const CReal &operand, const Expr &node, const DomainBudget &budget)
{
    ApartnessSearch found = find_apart(operand, budget.start_k, budget.max_k);
    if (const auto *miss = std::get_if<NoCertificateFound>(&found)) {
        throw DomainUnverifiable(node.kind(), node.span(), miss->max_precision);
    }
    return std::get<ApartnessCertificate>(found);
}

} // namespace

DomainUnverifiable::DomainUnverifiable(ExprKind kind, Span span, Precision max_k)
    : DomainError(kind, span,
                  "DomainUnverifiable: could not certify the domain condition of the " + describe(kind, span) +
                      " up to precision 2^-" + std::to_string(max_k) + " (inconclusive, not a proof of violation)"),
      max_k_(max_k)
{
}

DomainViolation::DomainViolation(ExprKind kind, Span span, CReal operand, ApartnessCertificate cert)
    : DomainError(kind, span,
                  "DomainViolation: the argument of the " + describe(kind, span) +
                      " is certified negative (|approx| > 2*2^-" + std::to_string(cert.precision) +
                      " at precision " + std::to_string(cert.precision) + ")"),
      operand_(std::move(operand)), cert_(cert)
{
}

CReal elaborate(const Expr &e, const DomainBudget &budget)
{
    switch (e.kind()) {
    case ExprKind::int_lit:
        return CReal::integer(e.value().get_num());
    case ExprKind::dec_lit:
        return CReal::rational(e.value());
    case ExprKind::pi:
        return pi(PiMethod::machin);
    case ExprKind::neg:
        return -elaborate(e.arg(0), budget);
    case ExprKind::add:
        return elaborate(e.arg(0), budget) + elaborate(e.arg(1), budget);
    case ExprKind::sub:
        return elaborate(e.arg(0), budget) - elaborate(e.arg(1), budget);
    case ExprKind::mul:
        return elaborate(e.arg(0), budget) * elaborate(e.arg(1), budget);
    case ExprKind::div: {
        const CReal num = elaborate(e.arg(0), budget);
        const CReal den = elaborate(e.arg(1), budget);
        return divide(num, den, require_apart(den, e, budget));
    }
    case ExprKind::exp:
        return exp(elaborate(e.arg(0), budget));
    case ExprKind::sin:
        return sin(elaborate(e.arg(0), budget));
    case ExprKind::cos:
        return cos(elaborate(e.arg(0), budget));
    case ExprKind::tan: {
        const CReal x = elaborate(e.arg(0), budget);
        return tan(x, require_apart(cos(x), e, budget));
    }
    case ExprKind::ln: {
        const CReal x = elaborate(e.arg(0), budget);
        const ApartnessCertificate cert = require_apart(x, e, budget);
        if (cert.sign == Sign::negative) {
            throw DomainViolation(e.kind(), e.span(), x, cert);
        }
        return ln(x, cert);
    }
    }
    throw std::logic_error("elaborate: unknown expression kind");
}

} // namespace cauchy
