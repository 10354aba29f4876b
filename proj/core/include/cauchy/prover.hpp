#ifndef CAUCHY_PROVER_HPP
#define CAUCHY_PROVER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cauchy/elaborate.hpp"
#include "cauchy/expr.hpp"
#include "cauchy/interval_eval.hpp"
#include "cauchy/outcome.hpp"

namespace cauchy
{

enum class Backend { creal, interval, both };

std::string_view to_string(Backend b);

struct ProveOptions
{
    /// First precision tried. The default corresponds to a starting tolerance of 1.
    Precision start_k = 1;
    Precision max_k = 4096;
    Backend backend = Backend::creal;
    DomainBudget domain{};
    IntervalOptions interval{};
};

struct ProveResult
{
    /// Verdict reported to the user. With Backend::both this is the CReal
    /// outcome, unless only the interval backend reached a verdict.
    ProofOutcome outcome;
    /// Backend::both only: the interval backend's own outcome.
    std::optional<ProofOutcome> cross_check;
};

/// The two backends produced disjoint enclosures or contradictory verdicts.
/// This always indicates a bug; report() describes where.
class BackendDisagreement : public Error
{
public:
    explicit BackendDisagreement(const std::string &report) : Error("backend disagreement: " + report) {}
};

/// Semi-decides q.lhs (<|>) q.rhs. The query is elaborated first, so domain
/// errors (DomainUnverifiable, DomainViolation) propagate before any search.
/// Exhausted means the enclosures still overlap at max_k: nothing is claimed.
ProveResult prove(const Query &q, const ProveOptions &options = {});

/// Semi-decision over the interval backend alone. Precisions where a domain
/// sign cannot yet be settled are skipped (no trace step is recorded).
ProofOutcome interval_semidecide(const Expr &lhs, const Expr &rhs, Precision start_k, Precision max_k,
                                 const IntervalOptions &options = {});

/// Trace wire format: a JSON array of records
///   {"k": K, "lhs_lower": D, "lhs_upper": D, "rhs_lower": D, "rhs_upper": D}
/// where each dyadic D is {"m": "<decimal mantissa>", "e": <exponent>} and its
/// value is m * 2^e. Bit-exact in both directions.
std::string trace_to_json(const std::vector<TraceStep> &trace);
std::vector<TraceStep> trace_from_json(std::string_view text);

} // namespace cauchy

#endif
