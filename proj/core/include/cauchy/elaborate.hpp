#ifndef CAUCHY_ELABORATE_HPP
#define CAUCHY_ELABORATE_HPP

#include <string>

#include "cauchy/creal.hpp"
#include "cauchy/expr.hpp"

namespace cauchy
{

/// Per-node precision budget for discharging domain conditions.
struct DomainBudget
{
    Precision start_k = 1;
    Precision max_k = 60;
};

/// Base of the two domain failures. Carries the offending node.
class DomainError : public Error
{
public:
    DomainError(ExprKind kind, Span span, const std::string &message)
        : Error(message), kind_(kind), span_(span)
    {
    }

    ExprKind kind() const { return kind_; }
    const Span &span() const { return span_; }

private:
    ExprKind kind_;
    Span span_;
};

/// No apartness certificate was found within the budget. Inconclusive: the
/// operand may still be nonzero (or positive), just closer to zero than 2^-max_k.
class DomainUnverifiable : public DomainError
{
public:
    DomainUnverifiable(ExprKind kind, Span span, Precision max_k);

    Precision max_precision() const { return max_k_; }

private:
    Precision max_k_;
};

/// The operand provably lies outside the domain (ln of a negative value).
/// certificate() revalidates against operand().
class DomainViolation : public DomainError
{
public:
    DomainViolation(ExprKind kind, Span span, CReal operand, ApartnessCertificate cert);

    const CReal &operand() const { return operand_; }
    const ApartnessCertificate &certificate() const { return cert_; }

private:
    CReal operand_;
    ApartnessCertificate cert_;
};

/// Builds the CReal for a closed expression. Division searches an apartness
/// certificate for its denominator, ln a positive certificate for its argument,
/// tan a certificate for cos of its argument. `pi` is the Machin definition.
CReal elaborate(const Expr &e, const DomainBudget &budget = {});

} // namespace cauchy

#endif
