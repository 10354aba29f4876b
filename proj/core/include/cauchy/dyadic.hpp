#ifndef CAUCHY_DYADIC_HPP
#define CAUCHY_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "cauchy/error.hpp"

namespace cauchy
{

enum class Rounding { nearest_even, floor, ceil };

/// Exact dyadic rational mantissa * 2^exponent.
///
/// Values are kept canonical: the mantissa is odd, or the value is zero with
/// exponent zero. Ring operations are exact; the only inexact operations are
/// the explicit rounding helpers (round_to, floor_to, ceil_to, quotient).
/// An exponent leaving the int64 range throws ExponentOverflow.
class Dyadic
{
public:
    Dyadic() = default;
    Dyadic(long value); // NOLINT(google-explicit-constructor)
    explicit Dyadic(const mpz_class &mantissa, std::int64_t exponent = 0);

    static Dyadic pow2(std::int64_t exponent);

    const mpz_class &mantissa() const { return mantissa_; }
    std::int64_t exponent() const { return exponent_; }

    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return sign() == 0; }

    Dyadic operator-() const;
    Dyadic abs() const;

    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);
    Dyadic &operator+=(const Dyadic &b) { return *this = *this + b; }
    Dyadic &operator-=(const Dyadic &b) { return *this = *this - b; }
    Dyadic &operator*=(const Dyadic &b) { return *this = *this * b; }

    /// Exact multiplication by 2^shift.
    Dyadic ldexp(std::int64_t shift) const;

    friend bool operator==(const Dyadic &a, const Dyadic &b)
    {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b);

    /// Nearest point of the grid 2^-k, ties to even mantissa. |result - *this| <= 2^-(k+1).
    Dyadic round_to(Precision k) const;
    Dyadic floor_to(Precision k) const;
    Dyadic ceil_to(Precision k) const;
    Dyadic rounded(Precision k, Rounding mode) const;

    /// num / den rounded onto the grid 2^-k. den must be nonzero.
    static Dyadic quotient(const Dyadic &num, const Dyadic &den, Precision k, Rounding mode);

    mpz_class floor() const;
    mpz_class ceil() const;

    /// Smallest e with |x| <= 2^e. Undefined for zero (throws std::domain_error).
    std::int64_t ceil_log2_abs() const;
    /// Largest e with 2^e <= |x|. Throws std::domain_error for zero.
    std::int64_t floor_log2_abs() const;

    /// Decimal rendering rounded to nearest (ties to even) at `digits` fractional digits.
    /// The printed value differs from the exact one by at most half a unit in the last place.
    std::string to_decimal_string(int digits) const;

    /// "m*2^e" form, bit-exact.
    std::string to_string() const;

    double to_double() const;

private:
    void normalize();

    mpz_class mantissa_{0};
    std::int64_t exponent_{0};
};

std::ostream &operator<<(std::ostream &os, const Dyadic &d);

inline Dyadic min(const Dyadic &a, const Dyadic &b) { return b < a ? b : a; }
inline Dyadic max(const Dyadic &a, const Dyadic &b) { return a < b ? b : a; }

namespace detail
{

std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Integer division num / den rounded per mode. den != 0.
mpz_class divide_rounded(const mpz_class &num, const mpz_class &den, Rounding mode);

} // namespace detail

} // namespace cauchy

#endif
