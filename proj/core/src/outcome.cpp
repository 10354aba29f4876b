#include "cauchy/outcome.hpp"

#include <algorithm>

namespace cauchy
{

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::proved:
        return "Proved";
    case Verdict::refuted:
        return "Refuted";
    case Verdict::exhausted:
        return "Exhausted";
    }
    return "?";
}

Precision next_precision(Precision k, Precision max_k) { return std::min(std::max(k + 1, 2 * k), max_k); }

bool verify_outcome(const ProofOutcome &outcome, bool less_than)
{
    for (std::size_t i = 1; i < outcome.trace.size(); ++i) {
        if (outcome.trace[i].precision <= outcome.trace[i - 1].precision) {
            return false;
        }
    }
    if (outcome.verdict == Verdict::exhausted) {
        return outcome.trace.empty() || outcome.trace.back().precision <= outcome.precision;
    }
    if (outcome.trace.empty() || outcome.trace.back().precision != outcome.precision) {
        return false;
    }
    const auto &last = outcome.trace.back();
    if (!last.lhs.well_formed() || !last.rhs.well_formed()) {
        return false;
    }
    const bool lhs_below = last.lhs.strictly_below(last.rhs);
    const bool rhs_below = last.rhs.strictly_below(last.lhs);
    const bool holds = less_than ? lhs_below : rhs_below;
    const bool opposite = less_than ? rhs_below : lhs_below;
    return outcome.verdict == Verdict::proved ? holds : opposite;
}

} // namespace cauchy
