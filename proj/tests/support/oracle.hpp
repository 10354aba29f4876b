// Exact-rational reference values for tests. Nothing here touches the engine:
// every enclosure is a plain mpq pair built from a textbook series with an
// explicit remainder bound.
#ifndef CAUCHY_TESTS_ORACLE_HPP
#define CAUCHY_TESTS_ORACLE_HPP

#include <string>
#include <utility>

#include <gmpxx.h>

namespace oracle
{

struct Enclosure
{
    mpq_class lo;
    mpq_class hi;

    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    bool contains(const mpq_class &x) const { return lo <= x && x <= hi; }
};

inline mpq_class pow2(long e)
{
    mpz_class p = 1;
    if (e >= 0) {
        p <<= e;
        return mpq_class(p);
    }
    p <<= -e;
    return mpq_class(mpz_class(1), p);
}

// An alternating series with terms decreasing in magnitude lies between
// consecutive partial sums.
template <class Term>
Enclosure alternating(Term term, const mpq_class &tolerance)
{
    mpq_class sum = 0;
    for (unsigned long n = 0;; ++n) {
        const mpq_class t = term(n);
        const mpq_class next = sum + t;
        if (abs(t) <= tolerance) {
            return sum < next ? Enclosure{sum, next} : Enclosure{next, sum};
        }
        sum = next;
    }
}

/// e = sum 1/n!; the tail after N terms is at most 2/N!.
inline Enclosure e(const mpq_class &tolerance)
{
    mpq_class sum = 0;
    mpz_class fact = 1;
    for (unsigned long n = 0;; ++n) {
        if (n > 0) {
            fact *= n;
        }
        const mpq_class tail(2, fact);
        if (tail <= tolerance) {
            return {sum, sum + tail};
        }
        sum += mpq_class(1, fact);
    }
}

/// ln 2 = 2 atanh(1/3) = 2 sum 3^-(2n+1)/(2n+1). Positive terms, ratio <= 1/9,
/// so the tail is at most 9/8 of the first omitted term.
inline Enclosure ln2(const mpq_class &tolerance)
{
    mpq_class sum = 0;
    mpz_class pow3 = 3;
    for (unsigned long n = 0;; ++n) {
        const mpq_class term(2, pow3 * (2 * n + 1));
        const mpq_class tail = term * mpq_class(9, 8);
        if (tail <= tolerance) {
            return {sum, sum + tail};
        }
        sum += term;
        pow3 *= 9;
    }
}

/// sin and cos at a rational |x| <= 1 via their alternating Taylor series.
inline Enclosure sin(const mpq_class &x, const mpq_class &tolerance)
{
    return alternating(
        [&x](unsigned long n) -> mpq_class {
            mpz_class fact = 1;
            mpq_class p = 1;
            for (unsigned long i = 1; i <= 2 * n + 1; ++i) {
                fact *= i;
                p *= x;
            }
            return (n % 2 == 0 ? p : mpq_class(-p)) / fact;
        },
        tolerance);
}

inline Enclosure cos(const mpq_class &x, const mpq_class &tolerance)
{
    return alternating(
        [&x](unsigned long n) -> mpq_class {
            mpz_class fact = 1;
            mpq_class p = 1;
            for (unsigned long i = 1; i <= 2 * n; ++i) {
                fact *= i;
                p *= x;
            }
            return (n % 2 == 0 ? p : mpq_class(-p)) / fact;
        },
        tolerance);
}

/// arctan(1/m) for an integer m >= 2.
inline Enclosure atan_inv(unsigned long m, const mpq_class &tolerance)
{
    return alternating(
        [m](unsigned long n) -> mpq_class {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), m, 2 * n + 1);
            den *= 2 * n + 1;
            return mpq_class(n % 2 == 0 ? 1 : -1, den);
        },
        tolerance);
}

/// pi = 16 atan(1/5) - 4 atan(1/239).
inline Enclosure pi(const mpq_class &tolerance)
{
    const Enclosure a = atan_inv(5, tolerance / 64);
    const Enclosure b = atan_inv(239, tolerance / 16);
    return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

/// Fixed-point decimal with `digits` digits after the point, rounding half away
/// from zero (ties cannot occur for the irrational constants used here).
inline std::string decimal(const mpq_class &x, int digits)
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpq_class scaled = abs(x) * scale + mpq_class(1, 2);
    mpz_class n = scaled.get_num() / scaled.get_den();
    std::string s = n.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) {
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (x < 0 && n != 0 ? "-" : "") + s;
}

} // namespace oracle

#endif
