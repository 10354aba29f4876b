#include "cauchy/creal.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <utility>

#include "creal_internal.hpp"

namespace cauchy
{

namespace
{

std::atomic<bool> g_cache_enabled{true};

constexpr std::uint64_t max_series_terms = std::uint64_t{1} << 31;

class ConstNode final : public detail::Node
{
public:
    explicit ConstNode(Dyadic value) : value_(std::move(value)) {}

protected:
    Dyadic evaluate(Precision) const override { return value_; }

private:
    Dyadic value_;
};

class RationalNode final : public detail::Node
{
public:
    RationalNode(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        return Dyadic::quotient(Dyadic(num_), Dyadic(den_), k + 2, Rounding::nearest_even);
    }

private:
    mpz_class num_;
    mpz_class den_;
};

class AddNode final : public detail::Node
{
public:
    AddNode(CReal x, CReal y) : x_(std::move(x)), y_(std::move(y)) {}

protected:
    Dyadic evaluate(Precision k) const override { return x_.approx(k + 2) + y_.approx(k + 2); }

private:
    CReal x_;
    CReal y_;
};

class NegNode final : public detail::Node
{
public:
    explicit NegNode(CReal x) : x_(std::move(x)) {}

protected:
    Dyadic evaluate(Precision k) const override { return -x_.approx(k + 1); }

private:
    CReal x_;
};

class MulNode final : public detail::Node
{
public:
    MulNode(CReal x, CReal y) : x_(std::move(x)), y_(std::move(y)) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        // |xy - ax*ay| <= |x||y - ay| + |ay||x - ax|, with |x| <= |x0| + 1 and
        // |ay| <= |y0| + 2. Each term gets half of the 2^-(k+1) budget.
        const Precision bx = detail::magnitude_bits(x_.approx(0).abs() + Dyadic(1));
        const Precision by = detail::magnitude_bits(y_.approx(0).abs() + Dyadic(2));
        return x_.approx(k + 2 + by) * y_.approx(k + 2 + bx);
    }

private:
    CReal x_;
    CReal y_;
};

class RecipNode final : public detail::Node
{
public:
    RecipNode(CReal x, ApartnessCertificate cert) : x_(std::move(x)), cert_(cert) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        // |x| > 2^-c and j >= c+1 give |a| > 2^-(c+1), so
        // |1/x - 1/a| = |x - a| / (|x||a|) < 2^(2c+1-j) = 2^-(k+2).
        const Precision c = cert_.precision;
        const Dyadic a = x_.approx(k + 2 * c + 3);
        return Dyadic::quotient(Dyadic(1), a, k + 2, Rounding::nearest_even);
    }

private:
    CReal x_;
    ApartnessCertificate cert_;
};

class LimitNode final : public detail::Node
{
public:
    LimitNode(Sequence seq, Modulus modulus) : seq_(std::move(seq)), modulus_(std::move(modulus)) {}

protected:
    Dyadic evaluate(Precision k) const override { return seq_(modulus_(k + 2)).approx(k + 2); }

private:
    Sequence seq_;
    Modulus modulus_;
};

class SeriesNode final : public detail::Node
{
public:
    SeriesNode(Sequence terms, Modulus tail_bound) : terms_(std::move(terms)), tail_bound_(std::move(tail_bound)) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        // Tail <= 2^-(k+2); N terms at 2^-(k+2+log2 N) each add at most 2^-(k+2).
        const std::uint64_t n_terms = tail_bound_(k + 1);
        if (n_terms > max_series_terms) {
            throw ResourceLimit("series_sum: " + std::to_string(n_terms) + " terms requested at precision " +
                                std::to_string(k));
        }
        if (n_terms == 0) {
            return Dyadic{};
        }
        const Precision term_k = k + 2 + detail::magnitude_bits(Dyadic(static_cast<long>(n_terms)));
        Dyadic sum;
        for (std::uint64_t n = 0; n < n_terms; ++n) {
            sum += terms_(n).approx(term_k);
        }
        return sum;
    }

private:
    Sequence terms_;
    Modulus tail_bound_;
};

class CappedNode final : public detail::Node
{
public:
    CappedNode(CReal x, Precision max_k, std::string what) : x_(std::move(x)), max_k_(max_k), what_(std::move(what))
    {
    }

protected:
    Dyadic evaluate(Precision k) const override
    {
        if (k > max_k_) {
            throw ResourceLimit(what_ + ": precision " + std::to_string(k) + " exceeds the feasibility cap " +
                                std::to_string(max_k_));
        }
        return x_.approx(k + 1);
    }

private:
    CReal x_;
    Precision max_k_;
    std::string what_;
};

Interval ball_at(const Dyadic &q, Precision k) { return Interval::ball(q, Dyadic::pow2(-k)); }

} // namespace

namespace detail
{

Precision magnitude_bits(const Dyadic &bound)
{
    if (bound.is_zero()) {
        return 0;
    }
    return std::max<Precision>(0, bound.ceil_log2_abs());
}

Dyadic Node::approx(Precision k) const
{
    if (k < 0) {
        throw std::invalid_argument("approx: negative precision " + std::to_string(k));
    }
    if (k > max_supported_precision) {
        throw ResourceLimit("approx: precision " + std::to_string(k) + " exceeds the supported maximum");
    }
    const bool use_cache = g_cache_enabled.load(std::memory_order_relaxed);
    if (use_cache) {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(k); it != cache_.end()) {
            return it->second;
        }
    }
    Dyadic q = evaluate(k).round_to(k + 1);
    if (use_cache) {
        std::lock_guard lock(mutex_);
        cache_.emplace(k, q);
    }
    return q;
}

} // namespace detail

void set_approximation_cache(bool enabled) { g_cache_enabled.store(enabled); }
bool approximation_cache_enabled() { return g_cache_enabled.load(); }

CReal::CReal() : CReal(dyadic(Dyadic{})) {}

CReal::CReal(detail::NodePtr node) : node_(std::move(node))
{
    if (!node_) {
        throw std::invalid_argument("CReal: null node");
    }
}

CReal CReal::integer(const mpz_class &value) { return dyadic(Dyadic(value)); }

CReal CReal::rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        throw std::domain_error("CReal::rational: zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    const mpz_class &d = q.get_den();
    // Power-of-two denominators are exact dyadics.
    if (mpz_popcount(d.get_mpz_t()) == 1) {
        const auto shift = static_cast<std::int64_t>(mpz_scan1(d.get_mpz_t(), 0));
        return dyadic(Dyadic(q.get_num(), -shift));
    }
    return CReal(std::make_shared<RationalNode>(q.get_num(), d));
}

CReal CReal::dyadic(const Dyadic &value) { return CReal(std::make_shared<ConstNode>(value)); }

Dyadic CReal::approx(Precision k) const { return node_->approx(k); }

CReal operator+(const CReal &x, const CReal &y) { return CReal(std::make_shared<AddNode>(x, y)); }
CReal operator-(const CReal &x, const CReal &y) { return x + (-y); }
CReal operator*(const CReal &x, const CReal &y) { return CReal(std::make_shared<MulNode>(x, y)); }
CReal CReal::operator-() const { return CReal(std::make_shared<NegNode>(*this)); }

bool revalidate(const CReal &x, const ApartnessCertificate &cert)
{
    if (cert.precision < 0) {
        return false;
    }
    const Dyadic q = x.approx(cert.precision);
    return q.abs() > Dyadic::pow2(1 - cert.precision) && q.sign() == static_cast<int>(cert.sign);
}

ApartnessSearch find_apart(const CReal &x, Precision start_k, Precision max_k)
{
    if (start_k < 0 || start_k > max_k) {
        throw std::invalid_argument("find_apart: require 0 <= start_k <= max_k");
    }
    for (Precision k = start_k;; k = next_precision(k, max_k)) {
        const Dyadic q = x.approx(k);
        if (q.abs() > Dyadic::pow2(1 - k)) {
            return ApartnessCertificate{k, q.sign() > 0 ? Sign::positive : Sign::negative};
        }
        if (k >= max_k) {
            break;
        }
    }
    return NoCertificateFound{max_k};
}

CReal recip(const CReal &x, const ApartnessCertificate &cert)
{
    if (!revalidate(x, cert)) {
        throw InvalidCertificate("recip: certificate at precision " + std::to_string(cert.precision) +
                                 " does not revalidate");
    }
    return CReal(std::make_shared<RecipNode>(x, cert));
}

CReal divide(const CReal &x, const CReal &y, const ApartnessCertificate &cert) { return x * recip(y, cert); }

CReal limit(Sequence seq, Modulus modulus)
{
    return CReal(std::make_shared<LimitNode>(std::move(seq), std::move(modulus)));
}

CReal series_sum(Sequence terms, Modulus tail_bound)
{
    return CReal(std::make_shared<SeriesNode>(std::move(terms), std::move(tail_bound)));
}

CReal precision_capped(const CReal &x, Precision max_k, std::string what)
{
    return CReal(std::make_shared<CappedNode>(x, max_k, std::move(what)));
}

ProofOutcome cmp_semidecide(const CReal &x, const CReal &y, Precision start_k, Precision max_k)
{
    if (start_k < 0 || start_k > max_k) {
        throw std::invalid_argument("cmp_semidecide: require 0 <= start_k <= max_k");
    }
    ProofOutcome out;
    for (Precision k = start_k;; k = next_precision(k, max_k)) {
        TraceStep step{k, ball_at(x.approx(k), k), ball_at(y.approx(k), k)};
        const bool below = step.lhs.strictly_below(step.rhs);
        const bool above = step.rhs.strictly_below(step.lhs);
        out.trace.push_back(std::move(step));
        if (below || above) {
            out.verdict = below ? Verdict::proved : Verdict::refuted;
            out.precision = k;
            return out;
        }
        if (k >= max_k) {
            break;
        }
    }
    out.verdict = Verdict::exhausted;
    out.precision = max_k;
    return out;
}

mpz_class archimedean_bound(const CReal &x) { return x.approx(2).floor() + 2; }

} // namespace cauchy
