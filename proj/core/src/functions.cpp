#include "cauchy/functions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ball.hpp"
#include "creal_internal.hpp"

namespace cauchy
{

namespace
{

using detail::Ball;

constexpr int max_refinements = 64;

/// Recomputes at growing working precision p until the ball radius is at most
/// 2^-target, then returns the midpoint.
template <typename Compute>
Dyadic refine_until(Precision target, Precision p, Compute &&compute)
{
    const Dyadic bound = Dyadic::pow2(-target);
    for (int attempt = 0; attempt < max_refinements; ++attempt) {
        Ball b = compute(p);
        if (b.rad <= bound) {
            return std::move(b.mid);
        }
        const Precision deficit = b.rad.ceil_log2_abs() + target;
        p += std::max<Precision>(deficit, 1) + 8;
        if (p > 4 * max_supported_precision) {
            break;
        }
    }
    throw ResourceLimit("working precision budget exhausted while refining a function value");
}

mpz_class two_pow(Precision e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// e^t for exact |t| <= 1. Remainder after N terms is at most 2/N!.
Ball exp_taylor(const Dyadic &t, Precision p)
{
    const mpz_class need = two_pow(p + 3);
    long n_terms = 1;
    mpz_class fact = 1;
    while (fact < need) {
        ++n_terms;
        fact *= n_terms;
    }
    const Ball tb = Ball::exact(t);
    Ball sum = Ball::exact(Dyadic{});
    Ball term = Ball::exact(Dyadic(1));
    for (long i = 0; i < n_terms; ++i) {
        sum = detail::add(sum, term, p);
        term = detail::div_int(detail::mul(term, tb, p), mpz_class(i + 1), p);
    }
    return detail::widen(sum, Dyadic::pow2(-(p + 2)));
}

// Alternating Taylor series for |t| <= 1; the first omitted term bounds the rest.
Ball sin_taylor(const Ball &t, Precision p)
{
    const mpz_class need = two_pow(p + 2);
    long n_terms = 0;
    mpz_class fact = 1; // (2N+1)!
    while (fact < need) {
        ++n_terms;
        fact *= (2 * n_terms) * (2 * n_terms + 1);
    }
    const Ball t2 = detail::mul(t, t, p);
    Ball sum = Ball::exact(Dyadic{});
    Ball term = t;
    for (long i = 0; i < n_terms; ++i) {
        sum = detail::add(sum, term, p);
        term = detail::neg(detail::div_int(detail::mul(term, t2, p), mpz_class((2 * i + 2) * (2 * i + 3)), p));
    }
    return detail::widen(sum, Dyadic::pow2(-(p + 2)));
}

Ball cos_taylor(const Ball &t, Precision p)
{
    const mpz_class need = two_pow(p + 2);
    long n_terms = 0;
    mpz_class fact = 1; // (2N)!
    while (fact < need) {
        ++n_terms;
        fact *= (2 * n_terms - 1) * (2 * n_terms);
    }
    if (n_terms == 0) {
        n_terms = 1;
    }
    const Ball t2 = detail::mul(t, t, p);
    Ball sum = Ball::exact(Dyadic{});
    Ball term = Ball::exact(Dyadic(1));
    for (long i = 0; i < n_terms; ++i) {
        sum = detail::add(sum, term, p);
        term = detail::neg(detail::div_int(detail::mul(term, t2, p), mpz_class((2 * i + 1) * (2 * i + 2)), p));
    }
    return detail::widen(sum, Dyadic::pow2(-(p + 2)));
}

// ln(1 + t) for exact |t| <= 1/2. With |t| <= 2^c the tail after N terms is
// at most 2^(c(N+1)+1).
Ball log1p_series(const Dyadic &t, Precision p)
{
    if (t.is_zero()) {
        return Ball::exact(Dyadic{});
    }
    const Precision c = t.ceil_log2_abs();
    const Precision n_terms = (p + 3 + (-c) - 1) / (-c);
    const Ball tb = Ball::exact(t);
    Ball pow = tb;
    Ball sum = Ball::exact(Dyadic{});
    for (Precision i = 1; i <= n_terms; ++i) {
        const Ball term = detail::div_int(pow, mpz_class(static_cast<long>(i)), p);
        sum = (i % 2 == 1) ? detail::add(sum, term, p) : detail::sub(sum, term, p);
        pow = detail::mul(pow, tb, p);
    }
    return detail::widen(sum, Dyadic::pow2(-(p + 2)));
}

class ExpNode final : public detail::Node
{
public:
    explicit ExpNode(CReal x) : x_(std::move(x)) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        // |e^x - e^a| <= e^max(x,a) |x - a| and max(x, a) <= a0 + 2, so
        // approximating x at k + 2 + ceil(1.5 * max(0, ceil(a0) + 2)) leaves 2^-(k+2).
        const mpz_class top = x_.approx(0).ceil() + 2;
        const Precision top_bits = top > 0 ? static_cast<Precision>((3 * top.get_si() + 1) / 2) : 0;
        const Dyadic a = x_.approx(k + 2 + top_bits);
        const Precision m = a.is_zero() ? 0 : std::max<Precision>(0, a.ceil_log2_abs());
        const Dyadic t = a.ldexp(-m);
        return refine_until(k + 2, k + 10 + 2 * m + top_bits, [&](Precision p) {
            Ball y = exp_taylor(t, p);
            for (Precision i = 0; i < m; ++i) {
                y = detail::mul(y, y, p);
            }
            return y;
        });
    }

private:
    CReal x_;
};

class TrigNode final : public detail::Node
{
public:
    TrigNode(CReal x, bool cosine) : x_(std::move(x)), cosine_(cosine) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        // sin and cos are 1-Lipschitz.
        const Dyadic a = x_.approx(k + 2);
        long m = 0;
        mpz_class pow3 = 1;
        while (Dyadic(pow3) < a.abs()) {
            pow3 *= 3;
            ++m;
        }
        const Dyadic divisor(pow3);
        return refine_until(k + 2, k + 10 + 4 * m, [&](Precision p) {
            const Ball t{Dyadic::quotient(a, divisor, p, Rounding::nearest_even), Dyadic::pow2(-(p + 1))};
            Ball y = cosine_ ? cos_taylor(t, p) : sin_taylor(t, p);
            for (long i = 0; i < m; ++i) {
                const Ball cube = detail::mul(detail::mul(y, y, p), y, p);
                // sin 3u = 3 sin u - 4 sin^3 u,  cos 3u = 4 cos^3 u - 3 cos u
                y = cosine_ ? detail::sub(detail::scale(cube, 4), detail::scale(y, 3), p)
                            : detail::sub(detail::scale(y, 3), detail::scale(cube, 4), p);
            }
            return y;
        });
    }

private:
    CReal x_;
    bool cosine_;
};

class LnNode final : public detail::Node
{
public:
    LnNode(CReal x, ApartnessCertificate cert) : x_(std::move(x)), cert_(cert) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        // x > 2^-c and a within 2^-j with j > c give min(x, a) > 2^-(c+1);
        // |ln x - ln a| <= |x - a| / min(x, a) <= 2^-(k+3).
        const Precision c = cert_.precision;
        const Dyadic a = x_.approx(k + 4 + c);
        // a = u * 2^e with u in [3/4, 3/2].
        std::int64_t e = a.floor_log2_abs();
        Dyadic u = a.ldexp(-e);
        if (u > Dyadic(3).ldexp(-1)) {
            ++e;
            u = u.ldexp(-1);
        }
        const Dyadic t = u - Dyadic(1);
        const mpz_class e_big(static_cast<long>(e));
        const Precision e_bits = detail::magnitude_bits(Dyadic(mpz_class(abs(e_big))) + Dyadic(1));
        return refine_until(k + 2, k + 12 + e_bits, [&](Precision p) {
            Ball y = log1p_series(t, p);
            if (e != 0) {
                // ln 2 = -ln(1 - 1/2)
                const Ball ln2 = detail::neg(log1p_series(Dyadic(-1).ldexp(-1), p + e_bits));
                y = detail::add(y, detail::scale(ln2, e_big), p);
            }
            return y;
        });
    }

private:
    CReal x_;
    ApartnessCertificate cert_;
};

class AtanNode final : public detail::Node
{
public:
    explicit AtanNode(mpq_class u) : u_(std::move(u)) {}

protected:
    Dyadic evaluate(Precision k) const override
    {
        if (u_ == 0) {
            return Dyadic{};
        }
        const mpz_class num = abs(u_.get_num());
        const mpz_class &den = u_.get_den();
        // Smallest N whose first omitted term |u|^(2N+1)/(2N+1) is <= 2^-(k+3).
        const mpz_class scale = two_pow(k + 3);
        const mpz_class num2 = num * num;
        const mpz_class den2 = den * den;
        long n_terms = 0;
        mpz_class pn = num;
        mpz_class pd = den;
        while (pn * scale > pd * (2 * n_terms + 1)) {
            ++n_terms;
            pn *= num2;
            pd *= den2;
        }
        // Each term is rounded to nearest on a grid fine enough that the N
        // rounding errors together stay below 2^-(k+3).
        const Precision p = k + 3 + detail::magnitude_bits(Dyadic(n_terms));
        Dyadic sum;
        mpz_class tn = u_.get_num();
        mpz_class td = den;
        const mpz_class u_num2 = u_.get_num() * u_.get_num();
        for (long i = 0; i < n_terms; ++i) {
            const Dyadic term = Dyadic::quotient(Dyadic(tn), Dyadic(mpz_class(td * (2 * i + 1))), p, Rounding::nearest_even);
            sum = (i % 2 == 0) ? sum + term : sum - term;
            tn *= u_num2;
            td *= den2;
        }
        return sum;
    }

private:
    mpq_class u_;
};

// p_0 = 0, p_n = p_{n-1} + cos(p_{n-1}), built lazily and shared.
class CosIteration
{
public:
    CReal at(std::uint64_t n)
    {
        std::lock_guard lock(mutex_);
        while (terms_.size() <= n) {
            if (terms_.empty()) {
                terms_.push_back(CReal::integer(0));
            } else {
                const CReal prev = terms_.back();
                terms_.push_back(prev + cos(prev));
            }
        }
        return terms_[n];
    }

private:
    std::mutex mutex_;
    std::vector<CReal> terms_;
};

} // namespace

CReal exp(const CReal &x) { return CReal(std::make_shared<ExpNode>(x)); }
CReal sin(const CReal &x) { return CReal(std::make_shared<TrigNode>(x, false)); }
CReal cos(const CReal &x) { return CReal(std::make_shared<TrigNode>(x, true)); }

CReal tan(const CReal &x, const ApartnessCertificate &cos_cert) { return sin(x) * recip(cos(x), cos_cert); }

CReal ln(const CReal &x, const ApartnessCertificate &cert)
{
    if (cert.sign != Sign::positive) {
        throw InvalidCertificate("ln: certificate must establish a positive argument");
    }
    if (!revalidate(x, cert)) {
        throw InvalidCertificate("ln: certificate at precision " + std::to_string(cert.precision) +
                                 " does not revalidate");
    }
    return CReal(std::make_shared<LnNode>(x, cert));
}

CReal atan_rat(const mpq_class &u)
{
    mpq_class v = u;
    v.canonicalize();
    if (abs(v) > mpq_class(1, 2)) {
        throw std::domain_error("atan_rat: |u| must be at most 1/2, got " + v.get_str());
    }
    return CReal(std::make_shared<AtanNode>(v));
}

std::string_view to_string(PiMethod m)
{
    switch (m) {
    case PiMethod::machin:
        return "machin";
    case PiMethod::leibniz:
        return "leibniz";
    case PiMethod::cos_iteration:
        return "cos_iteration";
    }
    return "?";
}

std::uint64_t cos_iteration_modulus(Precision k)
{
    static std::mutex mutex;
    static std::vector<Dyadic> bounds; // bounds[n-1] >= |p_n - pi/2|
    std::lock_guard lock(mutex);
    if (bounds.empty()) {
        bounds.push_back(Dyadic(19).ldexp(-5));
    }
    const Dyadic target = Dyadic::pow2(-k);
    std::size_t n = 0;
    while (true) {
        if (n == bounds.size()) {
            const Dyadic &b = bounds.back();
            const Precision grid = 3 * (-b.floor_log2_abs()) + 32;
            bounds.push_back(Dyadic::quotient(b * b * b, Dyadic(6), grid, Rounding::ceil));
        }
        if (bounds[n] <= target) {
            return n + 1;
        }
        ++n;
    }
}

CReal pi(PiMethod method, Precision leibniz_cap)
{
    switch (method) {
    case PiMethod::machin: {
        static const CReal value =
            CReal::integer(16) * atan_rat(mpq_class(1, 5)) - CReal::integer(4) * atan_rat(mpq_class(1, 239));
        return value;
    }
    case PiMethod::leibniz: {
        const CReal quarter = series_sum(
            [](std::uint64_t i) {
                return CReal::rational(mpz_class(i % 2 == 0 ? 1 : -1), mpz_class(2 * i + 1));
            },
            // Alternating with decreasing terms: |tail from N| <= 1/(2N+1) <= 2^-(k+1) at N = 2^k.
            [](Precision k) -> std::uint64_t {
                if (k >= 62) {
                    throw ResourceLimit("pi(leibniz): term count 2^" + std::to_string(k) + " is infeasible");
                }
                return std::uint64_t{1} << k;
            });
        return precision_capped(CReal::integer(4) * quarter, leibniz_cap, "pi(leibniz)");
    }
    case PiMethod::cos_iteration: {
        static const auto iteration = std::make_shared<CosIteration>();
        static const CReal value =
            CReal::integer(2) * limit([it = iteration](std::uint64_t n) { return it->at(n); }, cos_iteration_modulus);
        return value;
    }
    }
    throw std::invalid_argument("pi: unknown method");
}

} // namespace cauchy
