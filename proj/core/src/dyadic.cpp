#include "cauchy/dyadic.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cauchy
{

namespace detail
{

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ExponentOverflow("dyadic exponent overflow");
    }
    return out;
}

namespace
{

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw ExponentOverflow("dyadic exponent overflow");
    }
    return out;
}

mpz_class shl(const mpz_class &m, std::int64_t shift)
{
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return r;
}

} // namespace

mpz_class divide_rounded(const mpz_class &num, const mpz_class &den, Rounding mode)
{
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    mpz_class n = num;
    mpz_class d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    mpz_class q;
    mpz_class r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    switch (mode) {
    case Rounding::floor:
        return q;
    case Rounding::ceil:
        if (r != 0) {
            ++q;
        }
        return q;
    case Rounding::nearest_even: {
        const int c = cmp(mpz_class(r * 2), d);
        if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) {
            ++q;
        }
        return q;
    }
    }
    return q;
}

} // namespace detail

Dyadic::Dyadic(long value) : mantissa_(value) { normalize(); }

Dyadic::Dyadic(const mpz_class &mantissa, std::int64_t exponent) : mantissa_(mantissa), exponent_(exponent)
{
    normalize();
}

Dyadic Dyadic::pow2(std::int64_t exponent) { return Dyadic(mpz_class(1), exponent); }

void Dyadic::normalize()
{
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    const mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
        exponent_ = detail::checked_add(exponent_, static_cast<std::int64_t>(tz));
    }
}

Dyadic Dyadic::operator-() const
{
    Dyadic r = *this;
    r.mantissa_ = -r.mantissa_;
    return r;
}

Dyadic Dyadic::abs() const { return sign() < 0 ? -*this : *this; }

Dyadic operator+(const Dyadic &a, const Dyadic &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.exponent_ == b.exponent_) {
        return Dyadic(a.mantissa_ + b.mantissa_, a.exponent_);
    }
    if (a.exponent_ < b.exponent_) {
        return Dyadic(a.mantissa_ + detail::shl(b.mantissa_, detail::checked_sub(b.exponent_, a.exponent_)), a.exponent_);
    }
    return Dyadic(detail::shl(a.mantissa_, detail::checked_sub(a.exponent_, b.exponent_)) + b.mantissa_, b.exponent_);
}

Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }

Dyadic operator*(const Dyadic &a, const Dyadic &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Dyadic{};
    }
    // Product of odd mantissas is odd: already canonical.
    Dyadic r;
    r.mantissa_ = a.mantissa_ * b.mantissa_;
    r.exponent_ = detail::checked_add(a.exponent_, b.exponent_);
    return r;
}

Dyadic Dyadic::ldexp(std::int64_t shift) const
{
    if (is_zero()) {
        return *this;
    }
    Dyadic r = *this;
    r.exponent_ = detail::checked_add(exponent_, shift);
    return r;
}

std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b)
{
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) {
        return sa <=> sb;
    }
    if (sa == 0) {
        return std::strong_ordering::equal;
    }
    if (a.exponent_ == b.exponent_) {
        return cmp(a.mantissa_, b.mantissa_) <=> 0;
    }
    // Same nonzero sign: compare magnitudes by binary length before aligning.
    const auto la = a.floor_log2_abs();
    const auto lb = b.floor_log2_abs();
    if (la != lb) {
        return sa > 0 ? (la <=> lb) : (lb <=> la);
    }
    return (a - b).sign() <=> 0;
}

Dyadic Dyadic::rounded(Precision k, Rounding mode) const
{
    const std::int64_t grid = -k;
    if (is_zero() || exponent_ >= grid) {
        return *this;
    }
    const std::int64_t shift = detail::checked_sub(grid, exponent_);
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    // The mantissa is odd, so the discarded remainder is never zero.
    switch (mode) {
    case Rounding::floor:
        break;
    case Rounding::ceil:
        ++q;
        break;
    case Rounding::nearest_even:
        if (shift == 1) {
            if (mpz_odd_p(q.get_mpz_t())) {
                ++q;
            }
        } else if (mpz_tstbit(mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift - 1))) {
            ++q;
        }
        break;
    }
    return Dyadic(q, grid);
}

Dyadic Dyadic::round_to(Precision k) const { return rounded(k, Rounding::nearest_even); }
Dyadic Dyadic::floor_to(Precision k) const { return rounded(k, Rounding::floor); }
Dyadic Dyadic::ceil_to(Precision k) const { return rounded(k, Rounding::ceil); }

Dyadic Dyadic::quotient(const Dyadic &num, const Dyadic &den, Precision k, Rounding mode)
{
    if (den.is_zero()) {
        throw std::domain_error("Dyadic::quotient: division by zero");
    }
    if (num.is_zero()) {
        return Dyadic{};
    }
    const std::int64_t s = detail::checked_add(detail::checked_sub(num.exponent_, den.exponent_), k);
    mpz_class n = num.mantissa_;
    mpz_class d = den.mantissa_;
    if (s >= 0) {
        n = detail::shl(n, s);
    } else {
        d = detail::shl(d, -s);
    }
    return Dyadic(detail::divide_rounded(n, d, mode), -k);
}

mpz_class Dyadic::floor() const
{
    if (exponent_ >= 0) {
        return detail::shl(mantissa_, exponent_);
    }
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
    return q;
}

mpz_class Dyadic::ceil() const
{
    if (exponent_ >= 0) {
        return detail::shl(mantissa_, exponent_);
    }
    mpz_class q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
    return q;
}

std::int64_t Dyadic::floor_log2_abs() const
{
    if (is_zero()) {
        throw std::domain_error("log2 of zero");
    }
    const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(mantissa_.get_mpz_t(), 2));
    return detail::checked_add(bits - 1, exponent_);
}

std::int64_t Dyadic::ceil_log2_abs() const
{
    if (is_zero()) {
        throw std::domain_error("log2 of zero");
    }
    if (mantissa_ == 1 || mantissa_ == -1) {
        return exponent_;
    }
    const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(mantissa_.get_mpz_t(), 2));
    return detail::checked_add(bits, exponent_);
}

std::string Dyadic::to_decimal_string(int digits) const
{
    if (digits < 1) {
        throw std::invalid_argument("to_decimal_string: digits must be >= 1");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled;
    if (exponent_ >= 0) {
        scaled = detail::shl(mantissa_, exponent_) * scale;
    } else {
        scaled = detail::divide_rounded(mantissa_ * scale, detail::shl(mpz_class(1), -exponent_),
                                        Rounding::nearest_even);
    }
    const bool negative = scaled < 0;
    const mpz_class magnitude = negative ? mpz_class(-scaled) : scaled;
    const mpz_class int_part = magnitude / scale;
    const mpz_class frac_part = magnitude % scale;
    std::string frac = frac_part.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return (negative ? "-" : "") + int_part.get_str() + "." + frac;
}

std::string Dyadic::to_string() const { return mantissa_.get_str() + "*2^" + std::to_string(exponent_); }

double Dyadic::to_double() const
{
    if (is_zero()) {
        return 0.0;
    }
    long e = 0;
    const double d = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
    const std::int64_t total = static_cast<std::int64_t>(e) + exponent_;
    if (total > std::numeric_limits<int>::max()) {
        return d > 0 ? HUGE_VAL : -HUGE_VAL;
    }
    if (total < std::numeric_limits<int>::min()) {
        return 0.0;
    }
    return std::ldexp(d, static_cast<int>(total));
}

std::ostream &operator<<(std::ostream &os, const Dyadic &d) { return os << d.to_string(); }

} // namespace cauchy
