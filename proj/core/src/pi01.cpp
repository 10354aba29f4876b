#include "cauchy/pi01.hpp"

#include <cctype>
#include <vector>

namespace cauchy
{

struct Pi01Pred::Node
{
    enum class Op {
        num, var, neg, add, sub, mul,                    // integer-valued
        eq, ne, lt, le, gt, ge, divides, not_, and_, or_ // boolean-valued
    };
    Op op;
    mpz_class value;
    std::vector<std::shared_ptr<const Node>> args;
};

namespace
{

using Node = Pi01Pred::Node;
using NodePtr = std::shared_ptr<const Node>;
using Op = Node::Op;

NodePtr make(Op op, std::vector<NodePtr> args, mpz_class value = 0)
{
    return std::make_shared<const Node>(Node{op, std::move(value), std::move(args)});
}

// Thrown to unwind one alternative of a parenthesised group; never escapes.
struct Backtrack
{
    std::size_t position;
    std::string message;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse()
    {
        try {
            NodePtr p = pred();
            skip();
            if (pos_ != text_.size()) {
                fail("unexpected trailing input");
            }
            return p;
        } catch (const Backtrack &b) {
            throw ParseError(b.position, b.message);
        }
    }

private:
    [[noreturn]] void fail(const std::string &message) const { throw Backtrack{pos_, message}; }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool symbol(std::string_view s)
    {
        skip();
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    bool keyword(std::string_view word)
    {
        skip();
        if (text_.substr(pos_, word.size()) != word) {
            return false;
        }
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
            return false;
        }
        pos_ = end;
        return true;
    }

    NodePtr pred()
    {
        NodePtr lhs = conj();
        while (keyword("or")) {
            lhs = make(Op::or_, {lhs, conj()});
        }
        return lhs;
    }

    NodePtr conj()
    {
        NodePtr lhs = negation();
        while (keyword("and")) {
            lhs = make(Op::and_, {lhs, negation()});
        }
        return lhs;
    }

    NodePtr negation()
    {
        if (keyword("not")) {
            return make(Op::not_, {negation()});
        }
        skip();
        const std::size_t start = pos_;
        // "(" may open either a polynomial or a predicate: try the atom first.
        try {
            return atom();
        } catch (const Backtrack &first) {
            pos_ = start;
            if (!symbol("(")) {
                throw;
            }
            try {
                NodePtr inner = pred();
                if (!symbol(")")) {
                    fail("expected ')'");
                }
                return inner;
            } catch (const Backtrack &second) {
                throw second.position >= first.position ? second : first;
            }
        }
    }

    NodePtr atom()
    {
        NodePtr lhs = poly();
        static constexpr std::pair<std::string_view, Op> relations[] = {
            {"<=", Op::le}, {">=", Op::ge}, {"!=", Op::ne}, {"=", Op::eq}, {"<", Op::lt}, {">", Op::gt}, {"|", Op::divides},
        };
        for (const auto &[text, op] : relations) {
            if (symbol(text)) {
                return make(op, {lhs, poly()});
            }
        }
        fail("expected a comparison (=, !=, <, <=, >, >=) or '|'");
    }

    NodePtr poly()
    {
        NodePtr lhs = term();
        for (;;) {
            if (symbol("+")) {
                lhs = make(Op::add, {lhs, term()});
            } else if (symbol("-")) {
                lhs = make(Op::sub, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        while (symbol("*")) {
            lhs = make(Op::mul, {lhs, unary()});
        }
        return lhs;
    }

    NodePtr unary()
    {
        if (symbol("-")) {
            return make(Op::neg, {unary()});
        }
        if (symbol("(")) {
            NodePtr inner = poly();
            if (!symbol(")")) {
                fail("expected ')'");
            }
            return inner;
        }
        if (keyword("n")) {
            return make(Op::var, {});
        }
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected an integer, 'n' or '('");
        }
        return make(Op::num, {}, mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

mpz_class value_of(const Node &e, const mpz_class &n)
{
    switch (e.op) {
    case Op::num:
        return e.value;
    case Op::var:
        return n;
    case Op::neg:
        return -value_of(*e.args[0], n);
    case Op::add:
        return value_of(*e.args[0], n) + value_of(*e.args[1], n);
    case Op::sub:
        return value_of(*e.args[0], n) - value_of(*e.args[1], n);
    case Op::mul:
        return value_of(*e.args[0], n) * value_of(*e.args[1], n);
    default:
        throw std::logic_error("pi01: boolean node in integer position");
    }
}

bool truth_of(const Node &e, const mpz_class &n)
{
    switch (e.op) {
    case Op::eq:
        return value_of(*e.args[0], n) == value_of(*e.args[1], n);
    case Op::ne:
        return value_of(*e.args[0], n) != value_of(*e.args[1], n);
    case Op::lt:
        return value_of(*e.args[0], n) < value_of(*e.args[1], n);
    case Op::le:
        return value_of(*e.args[0], n) <= value_of(*e.args[1], n);
    case Op::gt:
        return value_of(*e.args[0], n) > value_of(*e.args[1], n);
    case Op::ge:
        return value_of(*e.args[0], n) >= value_of(*e.args[1], n);
    case Op::divides: {
        const mpz_class d = value_of(*e.args[0], n);
        const mpz_class x = value_of(*e.args[1], n);
        return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
    }
    case Op::not_:
        return !truth_of(*e.args[0], n);
    case Op::and_:
        return truth_of(*e.args[0], n) && truth_of(*e.args[1], n);
    case Op::or_:
        return truth_of(*e.args[0], n) || truth_of(*e.args[1], n);
    default:
        throw std::logic_error("pi01: integer node in boolean position");
    }
}

} // namespace

Pi01Pred Pi01Pred::parse(std::string_view text)
{
    return Pi01Pred(std::string(text), Parser(text).parse());
}

bool Pi01Pred::holds(const mpz_class &n) const { return truth_of(*root_, n); }

CReal pi01_sum(const Pi01Pred &p)
{
    return series_sum(
        [p](std::uint64_t n) {
            return p.holds(n) ? CReal::dyadic(Dyadic::pow2(-static_cast<std::int64_t>(n))) : CReal::integer(0);
        },
        [](Precision k) { return static_cast<std::uint64_t>(k + 2); });
}

Pi01Result pi01_decide(const Pi01Pred &p, Precision start_k, Precision max_k)
{
    if (start_k > max_k) {
        throw std::invalid_argument("pi01_decide: require start_k <= max_k");
    }
    ProofOutcome evidence = cmp_semidecide(pi01_sum(p), CReal::integer(2), start_k, max_k);
    if (evidence.verdict == Verdict::proved) {
        // A gap of at least 2^-(k+1) leaves a missing term 2^-n with n <= k+1.
        const auto bound = static_cast<std::uint64_t>(evidence.precision) + 2;
        const std::uint64_t n = witness_search(p, bound);
        return Counterexample{n, std::move(evidence)};
    }
    if (evidence.verdict == Verdict::refuted) {
        throw std::logic_error("pi01_decide: encoded sum exceeds 2");
    }
    return NoCounterexampleBelowBound{max_k, std::move(evidence)};
}

std::uint64_t witness_search(const Pi01Pred &p, std::uint64_t cap)
{
    for (std::uint64_t n = 0; n < cap; ++n) {
        if (!p.holds(n)) {
            return n;
        }
    }
    throw ResourceLimit("witness_search: no counterexample among the first " + std::to_string(cap) + " naturals");
}

} // namespace cauchy
