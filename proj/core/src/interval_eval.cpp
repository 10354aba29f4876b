#include "cauchy/interval_eval.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "creal_internal.hpp"

namespace cauchy
{

DomainUndetermined::DomainUndetermined(ExprKind kind, Span span, Precision k)
    : DomainError(kind, span,
                  "DomainUndetermined: operand of " + std::string(to_string(kind)) + " node at byte " +
                      std::to_string(span.begin) + " straddles zero at precision " + std::to_string(k) +
                      " (refine and retry)"),
      k_(k)
{
}

IntervalDomainViolation::IntervalDomainViolation(ExprKind kind, Span span, Interval operand)
    : DomainError(kind, span,
                  "DomainViolation: operand of " + std::string(to_string(kind)) + " node at byte " +
                      std::to_string(span.begin) + " is enclosed in " + operand.to_string() +
                      ", which lies entirely outside the domain"),
      operand_(std::move(operand))
{
}

namespace
{

// Raised inside one evaluation attempt when a domain sign cannot be settled.
struct Straddle
{
    ExprKind kind;
    Span span;
};

Dyadic down(const Dyadic &d, Precision p) { return d.floor_to(p); }
Dyadic up(const Dyadic &d, Precision p) { return d.ceil_to(p); }

Interval point(const Dyadic &d) { return Interval::point(d); }

Interval iadd(const Interval &a, const Interval &b, Precision p)
{
    return {down(a.lower + b.lower, p), up(a.upper + b.upper, p)};
}

Interval ineg(const Interval &a) { return {-a.upper, -a.lower}; }

Interval isub(const Interval &a, const Interval &b, Precision p) { return iadd(a, ineg(b), p); }

Interval imul(const Interval &a, const Interval &b, Precision p)
{
    const Dyadic p1 = a.lower * b.lower;
    const Dyadic p2 = a.lower * b.upper;
    const Dyadic p3 = a.upper * b.lower;
    const Dyadic p4 = a.upper * b.upper;
    return {down(min(min(p1, p2), min(p3, p4)), p), up(max(max(p1, p2), max(p3, p4)), p)};
}

Interval iscale(const Interval &a, const mpz_class &n)
{
    const Dyadic f(n);
    return n >= 0 ? Interval{a.lower * f, a.upper * f} : Interval{a.upper * f, a.lower * f};
}

// a / n for n > 0.
Interval idiv_int(const Interval &a, const mpz_class &n, Precision p)
{
    const Dyadic den(n);
    return {Dyadic::quotient(a.lower, den, p, Rounding::floor), Dyadic::quotient(a.upper, den, p, Rounding::ceil)};
}

Interval irational(const mpz_class &num, const mpz_class &den, Precision p)
{
    return {Dyadic::quotient(Dyadic(num), Dyadic(den), p, Rounding::floor),
            Dyadic::quotient(Dyadic(num), Dyadic(den), p, Rounding::ceil)};
}

bool straddles_zero(const Interval &a) { return a.lower.sign() <= 0 && a.upper.sign() >= 0; }

// 1/a for an interval not containing zero; 1/x is decreasing on either side.
Interval irecip(const Interval &a, Precision p)
{
    return {Dyadic::quotient(Dyadic(1), a.upper, p, Rounding::floor),
            Dyadic::quotient(Dyadic(1), a.lower, p, Rounding::ceil)};
}

Interval iwiden(const Interval &a, const Dyadic &r) { return {a.lower - r, a.upper + r}; }

mpz_class two_pow(Precision e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// Enclosure of e^d for an exact dyadic d.
Interval exp_point(const Dyadic &d, Precision p)
{
    if (d.is_zero()) {
        return point(Dyadic(1));
    }
    const Precision m = std::max<Precision>(0, d.ceil_log2_abs());
    const Dyadic t = d.ldexp(-m);
    const mpz_class top = d.ceil();
    const Precision growth = top > 0 ? 2 * top.get_si() : 0;
    const Precision q = p + 2 * m + 8 + growth;

    const mpz_class need = two_pow(q + 3);
    long n_terms = 1;
    mpz_class fact = 1;
    while (fact < need) {
        ++n_terms;
        fact *= n_terms;
    }
    Interval sum = point(Dyadic{});
    Interval term = point(Dyadic(1));
    for (long i = 0; i < n_terms; ++i) {
        sum = iadd(sum, term, q);
        term = idiv_int(imul(term, point(t), q), mpz_class(i + 1), q);
    }
    // |t| <= 1: remainder <= 2/N! <= 2^-(q+2). e^t > 0.
    sum = iwiden(sum, Dyadic::pow2(-(q + 2)));
    sum.lower = max(sum.lower, Dyadic{});
    for (Precision i = 0; i < m; ++i) {
        sum = {down(sum.lower * sum.lower, q), up(sum.upper * sum.upper, q)};
    }
    return sum;
}

Interval trig_taylor(const Interval &t, bool cosine, Precision q)
{
    const mpz_class need = two_pow(q + 2);
    long n_terms = 0;
    mpz_class fact = 1;
    while (fact < need) {
        ++n_terms;
        fact *= cosine ? (2 * n_terms - 1) * (2 * n_terms) : (2 * n_terms) * (2 * n_terms + 1);
    }
    n_terms = std::max(n_terms, 1L);
    const Interval t2 = imul(t, t, q);
    Interval sum = point(Dyadic{});
    Interval term = cosine ? point(Dyadic(1)) : t;
    for (long i = 0; i < n_terms; ++i) {
        sum = iadd(sum, term, q);
        const long div = cosine ? (2 * i + 1) * (2 * i + 2) : (2 * i + 2) * (2 * i + 3);
        term = ineg(idiv_int(imul(term, t2, q), mpz_class(div), q));
    }
    return iwiden(sum, Dyadic::pow2(-(q + 2)));
}

// Enclosure of sin(c) or cos(c) for an exact dyadic c, by triple-angle reduction.
Interval trig_point(const Dyadic &c, bool cosine, Precision p)
{
    long m = 0;
    mpz_class pow3 = 1;
    while (Dyadic(pow3) < c.abs()) {
        pow3 *= 3;
        ++m;
    }
    const Precision q = p + 4 * m + 8;
    const Dyadic divisor(pow3);
    const Interval t{Dyadic::quotient(c, divisor, q, Rounding::floor), Dyadic::quotient(c, divisor, q, Rounding::ceil)};
    Interval y = trig_taylor(t, cosine, q);
    for (long i = 0; i < m; ++i) {
        const Interval cube = imul(imul(y, y, q), y, q);
        y = cosine ? isub(iscale(cube, 4), iscale(y, 3), q) : isub(iscale(y, 3), iscale(cube, 4), q);
    }
    return y;
}

Interval trig(const Interval &a, bool cosine, Precision p)
{
    const Dyadic center = (a.lower + a.upper).ldexp(-1);
    const Dyadic radius = (a.upper - a.lower).ldexp(-1);
    const Interval e = trig_point(center, cosine, p);
    Interval r{down(e.lower - radius, p), up(e.upper + radius, p)};
    r.lower = max(r.lower, Dyadic(-1));
    r.upper = min(r.upper, Dyadic(1));
    return r;
}

// ln(1 + t) for exact |t| <= 1/2.
Interval log1p_interval(const Dyadic &t, Precision q)
{
    if (t.is_zero()) {
        return point(Dyadic{});
    }
    const Precision c = t.ceil_log2_abs();
    const Precision n_terms = (q + 3 + (-c) - 1) / (-c);
    Interval pow = point(t);
    Interval sum = point(Dyadic{});
    for (Precision i = 1; i <= n_terms; ++i) {
        const Interval term = idiv_int(pow, mpz_class(static_cast<long>(i)), q);
        sum = (i % 2 == 1) ? iadd(sum, term, q) : isub(sum, term, q);
        pow = imul(pow, point(t), q);
    }
    return iwiden(sum, Dyadic::pow2(-(q + 2)));
}

// Enclosure of ln(d) for an exact dyadic d > 0.
Interval ln_point(const Dyadic &d, Precision p)
{
    std::int64_t e = d.floor_log2_abs();
    Dyadic u = d.ldexp(-e);
    if (u > Dyadic(3).ldexp(-1)) {
        ++e;
        u = u.ldexp(-1);
    }
    const mpz_class e_big(static_cast<long>(e));
    const Precision e_bits = detail::magnitude_bits(Dyadic(mpz_class(abs(e_big))) + Dyadic(1));
    const Precision q = p + 8;
    Interval y = log1p_interval(u - Dyadic(1), q);
    if (e != 0) {
        const Interval ln2 = ineg(log1p_interval(Dyadic(-1).ldexp(-1), q + e_bits));
        y = iadd(y, iscale(ln2, e_big), q);
    }
    return y;
}

Interval atan_interval(long num, long den, Precision q)
{
    const mpz_class scale = two_pow(q + 3);
    const mpz_class n2 = mpz_class(num) * num;
    const mpz_class d2 = mpz_class(den) * den;
    Interval sum = point(Dyadic{});
    mpz_class tn = num;
    mpz_class td = den;
    for (long i = 0;; ++i) {
        // First omitted term bounds the alternating tail.
        if (tn * scale <= td * (2 * i + 1)) {
            break;
        }
        const Interval term = irational(tn, mpz_class(td * (2 * i + 1)), q);
        sum = (i % 2 == 0) ? iadd(sum, term, q) : isub(sum, term, q);
        tn *= n2;
        td *= d2;
    }
    return iwiden(sum, Dyadic::pow2(-(q + 3)));
}

Interval pi_interval(Precision p)
{
    const Precision q = p + 8;
    const Interval a = atan_interval(1, 5, q);
    const Interval b = atan_interval(1, 239, q);
    return isub(iscale(a, 16), iscale(b, 4), p);
}

class Evaluator
{
public:
    explicit Evaluator(Precision p) : p_(p) {}

    Interval eval(const Expr &e) const
    {
        switch (e.kind()) {
        case ExprKind::int_lit:
            return point(Dyadic(e.value().get_num()));
        case ExprKind::dec_lit:
            return irational(e.value().get_num(), e.value().get_den(), p_);
        case ExprKind::pi:
            return pi_interval(p_);
        case ExprKind::neg:
            return ineg(eval(e.arg(0)));
        case ExprKind::add:
            return iadd(eval(e.arg(0)), eval(e.arg(1)), p_);
        case ExprKind::sub:
            return isub(eval(e.arg(0)), eval(e.arg(1)), p_);
        case ExprKind::mul:
            return imul(eval(e.arg(0)), eval(e.arg(1)), p_);
        case ExprKind::div: {
            const Interval num = eval(e.arg(0));
            const Interval den = eval(e.arg(1));
            if (straddles_zero(den)) {
                throw Straddle{e.kind(), e.span()};
            }
            return imul(num, irecip(den, p_), p_);
        }
        case ExprKind::exp: {
            const Interval a = eval(e.arg(0));
            return {down(exp_point(a.lower, p_).lower, p_), up(exp_point(a.upper, p_).upper, p_)};
        }
        case ExprKind::sin:
            return trig(eval(e.arg(0)), false, p_);
        case ExprKind::cos:
            return trig(eval(e.arg(0)), true, p_);
        case ExprKind::tan: {
            const Interval a = eval(e.arg(0));
            const Interval c = trig(a, true, p_);
            if (straddles_zero(c)) {
                throw Straddle{e.kind(), e.span()};
            }
            return imul(trig(a, false, p_), irecip(c, p_), p_);
        }
        case ExprKind::ln: {
            const Interval a = eval(e.arg(0));
            if (a.upper.sign() <= 0) {
                throw IntervalDomainViolation(e.kind(), e.span(), a);
            }
            if (a.lower.sign() <= 0) {
                throw Straddle{e.kind(), e.span()};
            }
            return {down(ln_point(a.lower, p_).lower, p_), up(ln_point(a.upper, p_).upper, p_)};
        }
        }
        throw std::logic_error("eval_interval: unknown expression kind");
    }

private:
    Precision p_;
};

} // namespace

IntervalResult eval_interval(const Expr &e, Precision k, const IntervalOptions &options)
{
    if (k < 0) {
        throw std::invalid_argument("eval_interval: negative precision");
    }
    const Dyadic target = Dyadic::pow2(-k);
    Precision p = k + 8 + 4 * static_cast<Precision>(e.depth());
    const int attempts = std::max(1, options.max_refinements);
    Interval raw;
    bool have = false;
    Precision used = p;
    for (int attempt = 0; attempt < attempts; ++attempt, p = 2 * p + 16) {
        if (p > 4 * max_supported_precision) {
            break;
        }
        try {
            raw = Evaluator(p).eval(e);
            have = true;
            used = p;
        } catch (const Straddle &s) {
            if (attempt + 1 == attempts) {
                throw DomainUndetermined(s.kind, s.span, k);
            }
            continue;
        }
        if (raw.width() <= target) {
            break;
        }
    }
    if (!have) {
        throw ResourceLimit("eval_interval: working precision budget exhausted");
    }
    IntervalResult out;
    if (options.inject_inward_rounding_fault) {
        out.enclosure = {raw.lower.ceil_to(k + 2), raw.upper.floor_to(k + 2)};
    } else {
        out.enclosure = {raw.lower.floor_to(k + 2), raw.upper.ceil_to(k + 2)};
    }
    out.converged = out.enclosure.well_formed() && out.enclosure.width() <= Dyadic::pow2(1 - k);
    out.working_precision = used;
    return out;
}

std::string ConformanceReport::to_string() const
{
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << " at precision " << precision << ": creal " << creal_ball.to_string()
       << " interval " << interval.enclosure.to_string() << (interval.converged ? "" : " (unconverged)");
    return os.str();
}

ConformanceReport conformance_check(const Expr &e, Precision k, const DomainBudget &budget,
                                    const IntervalOptions &options)
{
    ConformanceReport report;
    report.precision = k;
    const CReal x = elaborate(e, budget);
    report.creal_ball = Interval::ball(x.approx(k), Dyadic::pow2(-k));
    report.interval = eval_interval(e, k, options);
    report.pass = report.creal_ball.intersects(report.interval.enclosure);
    return report;
}

} // namespace cauchy
