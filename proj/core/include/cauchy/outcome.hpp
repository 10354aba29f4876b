#ifndef CAUCHY_OUTCOME_HPP
#define CAUCHY_OUTCOME_HPP

#include <string_view>
#include <vector>

#include "cauchy/interval.hpp"

namespace cauchy
{

enum class Verdict {
    proved,   ///< the queried strict inequality holds
    refuted,  ///< the opposite strict inequality holds
    exhausted ///< enclosures still overlap at the precision cap; says nothing about truth
};

std::string_view to_string(Verdict v);

/// Enclosures of both sides of a comparison at one visited precision.
struct TraceStep
{
    Precision precision;
    Interval lhs;
    Interval rhs;

    friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

/// Result of a semi-decision. For proved/refuted, the last trace step holds the
/// separating enclosures and `precision` equals its precision. For exhausted,
/// `precision` is the cap that was reached.
struct ProofOutcome
{
    Verdict verdict = Verdict::exhausted;
    Precision precision = 0;
    std::vector<TraceStep> trace;

    const Interval &lhs_enclosure() const { return trace.back().lhs; }
    const Interval &rhs_enclosure() const { return trace.back().rhs; }
};

/// Next precision of the deepening schedule: max(k+1, 2k), clamped to the cap so
/// that the cap itself is always visited.
Precision next_precision(Precision k, Precision max_k);

/// Re-checks an outcome from its trace alone, using exact dyadic comparison:
/// precisions strictly increase along the schedule and, for proved/refuted, the
/// final enclosures are well-formed and disjoint in the claimed direction.
/// `less_than` selects whether the query was lhs < rhs (true) or lhs > rhs.
bool verify_outcome(const ProofOutcome &outcome, bool less_than);

} // namespace cauchy

#endif
