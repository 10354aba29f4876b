#ifndef CAUCHY_INTERVAL_EVAL_HPP
#define CAUCHY_INTERVAL_EVAL_HPP

#include <string>

#include "cauchy/elaborate.hpp"
#include "cauchy/expr.hpp"
#include "cauchy/interval.hpp"

namespace cauchy
{

/// Knobs for the interval backend. The fault switch exists for conformance
/// testing only: it rounds the final enclosure inward instead of outward.
struct IntervalOptions
{
    int max_refinements = 4;
    bool inject_inward_rounding_fault = false;
};

struct IntervalResult
{
    Interval enclosure;
    /// width <= 2^(1-k). When false the enclosure is still sound, just wider.
    bool converged = false;
    /// Last working grid exponent used for endpoint rounding.
    Precision working_precision = 0;
};

/// A partial-function operand straddles zero at every working precision tried.
/// This asks the caller to refine; it never asserts a domain violation.
class DomainUndetermined : public DomainError
{
public:
    DomainUndetermined(ExprKind kind, Span span, Precision k);

    Precision precision() const { return k_; }

private:
    Precision k_;
};

/// The whole operand enclosure has the wrong sign (ln of a non-positive interval).
class IntervalDomainViolation : public DomainError
{
public:
    IntervalDomainViolation(ExprKind kind, Span span, Interval operand);

    const Interval &operand() const { return operand_; }

private:
    Interval operand_;
};

/// Outward-rounded interval evaluation of e, aiming at width <= 2^(1-k).
///
/// Endpoints are dyadics rounded outward on a working grid that is refined
/// until the target width is met or max_refinements is used up. Transcendental
/// nodes enclose exact point values and extend them with monotonicity (exp, ln)
/// or the derivative bound |sin'|, |cos'| <= 1.
IntervalResult eval_interval(const Expr &e, Precision k, const IntervalOptions &options = {});

struct ConformanceReport
{
    bool pass = false;
    Precision precision = 0;
    Interval creal_ball;        ///< [q - 2^-k, q + 2^-k], q = approx(elaborate(e), k)
    IntervalResult interval;    ///< eval_interval(e, k)
    std::string to_string() const;
};

/// Both backends enclose the same ideal value; disjoint (or malformed)
/// enclosures expose a bug in one of them.
ConformanceReport conformance_check(const Expr &e, Precision k, const DomainBudget &budget = {},
                                    const IntervalOptions &options = {});

} // namespace cauchy

#endif
