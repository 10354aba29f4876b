#ifndef CAUCHY_PI01_HPP
#define CAUCHY_PI01_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "cauchy/creal.hpp"
#include "cauchy/outcome.hpp"

namespace cauchy
{

/// A decidable predicate P(n) over the naturals.
///
///   pred  := conj ("or" conj)*
///   conj  := neg ("and" neg)*
///   neg   := "not" neg | "(" pred ")" | atom
///   atom  := poly ("=" | "!=" | "<" | "<=" | ">" | ">=") poly | poly "|" poly
///   poly  := term (("+" | "-") term)*
///   term  := unary ("*" unary)*
///   unary := "-" unary | integer | "n" | "(" poly ")"
///
/// "d | e" holds iff d divides e (0 divides only 0). Arithmetic is exact.
class Pi01Pred
{
public:
    struct Node;

    static Pi01Pred parse(std::string_view text);

    bool holds(const mpz_class &n) const;
    bool holds(std::uint64_t n) const { return holds(mpz_class(static_cast<unsigned long>(n))); }

    const std::string &source() const { return source_; }

private:
    Pi01Pred(std::string source, std::shared_ptr<const Node> root) : source_(std::move(source)), root_(std::move(root)) {}

    std::string source_;
    std::shared_ptr<const Node> root_;
};

/// S = sum over n >= 0 of (P(n) ? 2^-n : 0). S = 2 iff P holds everywhere.
CReal pi01_sum(const Pi01Pred &p);

struct Counterexample
{
    std::uint64_t n;
    ProofOutcome evidence; ///< the proof of S < 2
};

/// No counterexample was detected up to the precision cap. This does not claim
/// that P holds for every n.
struct NoCounterexampleBelowBound
{
    Precision max_precision;
    ProofOutcome evidence;
};

using Pi01Result = std::variant<Counterexample, NoCounterexampleBelowBound>;

Pi01Result pi01_decide(const Pi01Pred &p, Precision start_k = 1, Precision max_k = 256);

constexpr std::uint64_t default_witness_cap = std::uint64_t{1} << 32;

/// Least n with not P(n), by linear scan from 0. Throws ResourceLimit once
/// `cap` candidates have been rejected.
std::uint64_t witness_search(const Pi01Pred &p, std::uint64_t cap = default_witness_cap);

} // namespace cauchy

#endif
