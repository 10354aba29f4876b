#include "cauchy/prover.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace cauchy
{

namespace
{

ProofOutcome flip(ProofOutcome out)
{
    if (out.verdict == Verdict::proved) {
        out.verdict = Verdict::refuted;
    } else if (out.verdict == Verdict::refuted) {
        out.verdict = Verdict::proved;
    }
    return out;
}

void cross_check(const ProofOutcome &a, const ProofOutcome &b)
{
    const bool decided = a.verdict != Verdict::exhausted && b.verdict != Verdict::exhausted;
    if (decided && a.verdict != b.verdict) {
        throw BackendDisagreement("creal says " + std::string(to_string(a.verdict)) + ", interval says " +
                                  std::string(to_string(b.verdict)));
    }
    std::map<Precision, const TraceStep *> by_k;
    for (const auto &s : a.trace) {
        by_k.emplace(s.precision, &s);
    }
    for (const auto &s : b.trace) {
        auto it = by_k.find(s.precision);
        if (it == by_k.end()) {
            continue;
        }
        const TraceStep &c = *it->second;
        if (!c.lhs.intersects(s.lhs)) {
            throw BackendDisagreement("lhs at k=" + std::to_string(s.precision) + ": creal " + c.lhs.to_string() +
                                      " vs interval " + s.lhs.to_string());
        }
        if (!c.rhs.intersects(s.rhs)) {
            throw BackendDisagreement("rhs at k=" + std::to_string(s.precision) + ": creal " + c.rhs.to_string() +
                                      " vs interval " + s.rhs.to_string());
        }
    }
}

nlohmann::json dyadic_json(const Dyadic &d) { return {{"m", d.mantissa().get_str()}, {"e", d.exponent()}}; }

Dyadic dyadic_from(const nlohmann::json &j)
{
    const mpz_class m(j.at("m").get<std::string>(), 10);
    return Dyadic(m, j.at("e").get<std::int64_t>());
}

} // namespace

std::string_view to_string(Backend b)
{
    switch (b) {
    case Backend::creal:
        return "creal";
    case Backend::interval:
        return "interval";
    case Backend::both:
        return "both";
    }
    return "?";
}

ProofOutcome interval_semidecide(const Expr &lhs, const Expr &rhs, Precision start_k, Precision max_k,
                                 const IntervalOptions &options)
{
    if (start_k < 0 || start_k > max_k) {
        throw std::invalid_argument("interval_semidecide: require 0 <= start_k <= max_k");
    }
    ProofOutcome out;
    for (Precision k = start_k;; k = next_precision(k, max_k)) {
        try {
            TraceStep step{k, eval_interval(lhs, k, options).enclosure, eval_interval(rhs, k, options).enclosure};
            const bool below = step.lhs.strictly_below(step.rhs);
            const bool above = step.rhs.strictly_below(step.lhs);
            out.trace.push_back(std::move(step));
            if (below || above) {
                out.verdict = below ? Verdict::proved : Verdict::refuted;
                out.precision = k;
                return out;
            }
        } catch (const DomainUndetermined &) {
        }
        if (k >= max_k) {
            break;
        }
    }
    out.verdict = Verdict::exhausted;
    out.precision = max_k;
    return out;
}

ProveResult prove(const Query &q, const ProveOptions &options)
{
    if (options.start_k < 0 || options.start_k > options.max_k) {
        throw std::invalid_argument("prove: require 0 <= start_k <= max_k");
    }
    if (options.max_k > max_supported_precision) {
        throw ResourceLimit("prove: max precision exceeds " + std::to_string(max_supported_precision));
    }
    const CReal lhs = elaborate(*q.lhs, options.domain);
    const CReal rhs = elaborate(*q.rhs, options.domain);
    const bool less = q.relation == Relation::less;
    auto orient = [less](ProofOutcome o) { return less ? std::move(o) : flip(std::move(o)); };

    ProveResult result;
    switch (options.backend) {
    case Backend::creal:
        result.outcome = orient(cmp_semidecide(lhs, rhs, options.start_k, options.max_k));
        break;
    case Backend::interval:
        result.outcome =
            orient(interval_semidecide(*q.lhs, *q.rhs, options.start_k, options.max_k, options.interval));
        break;
    case Backend::both: {
        ProofOutcome a = orient(cmp_semidecide(lhs, rhs, options.start_k, options.max_k));
        ProofOutcome b =
            orient(interval_semidecide(*q.lhs, *q.rhs, options.start_k, options.max_k, options.interval));
        cross_check(a, b);
        if (a.verdict == Verdict::exhausted && b.verdict != Verdict::exhausted) {
            std::swap(a, b);
        }
        result.outcome = std::move(a);
        result.cross_check = std::move(b);
        break;
    }
    }
    return result;
}

std::string trace_to_json(const std::vector<TraceStep> &trace)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &s : trace) {
        arr.push_back({{"k", s.precision},
                       {"lhs_lower", dyadic_json(s.lhs.lower)},
                       {"lhs_upper", dyadic_json(s.lhs.upper)},
                       {"rhs_lower", dyadic_json(s.rhs.lower)},
                       {"rhs_upper", dyadic_json(s.rhs.upper)}});
    }
    return arr.dump();
}

std::vector<TraceStep> trace_from_json(std::string_view text)
{
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("trace_from_json: ") + e.what());
    }
    if (!arr.is_array()) {
        throw Error("trace_from_json: expected an array");
    }
    std::vector<TraceStep> out;
    try {
        for (const auto &r : arr) {
            out.push_back(TraceStep{r.at("k").get<Precision>(),
                                    Interval{dyadic_from(r.at("lhs_lower")), dyadic_from(r.at("lhs_upper"))},
                                    Interval{dyadic_from(r.at("rhs_lower")), dyadic_from(r.at("rhs_upper"))}});
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("trace_from_json: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(std::string("trace_from_json: bad mantissa: ") + e.what());
    }
    return out;
}

} // namespace cauchy
