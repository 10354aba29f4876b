#ifndef CAUCHY_SRC_BALL_HPP
#define CAUCHY_SRC_BALL_HPP

#include <gmpxx.h>

#include "cauchy/dyadic.hpp"

namespace cauchy::detail
{

/// Midpoint-radius enclosure used inside the function nodes to track rounding
/// and truncation error rigorously. Midpoints live on the working grid 2^-p.
struct Ball
{
    Dyadic mid;
    Dyadic rad;

    static Ball exact(Dyadic v) { return {std::move(v), Dyadic{}}; }
};

/// Radii are kept on a grid finer than the working one, rounded upward.
inline Dyadic tidy_radius(const Dyadic &r, Precision p) { return r.ceil_to(p + 16); }

inline Ball add(const Ball &a, const Ball &b, Precision p)
{
    const Dyadic exact = a.mid + b.mid;
    Dyadic mid = exact.round_to(p);
    Dyadic rad = a.rad + b.rad + (mid - exact).abs();
    return {std::move(mid), tidy_radius(rad, p)};
}

inline Ball neg(const Ball &a) { return {-a.mid, a.rad}; }

inline Ball sub(const Ball &a, const Ball &b, Precision p) { return add(a, neg(b), p); }

inline Ball mul(const Ball &a, const Ball &b, Precision p)
{
    const Dyadic exact = a.mid * b.mid;
    Dyadic mid = exact.round_to(p);
    Dyadic rad = a.mid.abs() * b.rad + b.mid.abs() * a.rad + a.rad * b.rad + (mid - exact).abs();
    return {std::move(mid), tidy_radius(rad, p)};
}

inline Ball scale(const Ball &a, long n) { return {a.mid * Dyadic(n), a.rad * Dyadic(n < 0 ? -n : n)}; }

inline Ball scale(const Ball &a, const mpz_class &n)
{
    return {a.mid * Dyadic(n), a.rad * Dyadic(mpz_class(abs(n)))};
}

inline Ball div_int(const Ball &a, const mpz_class &n, Precision p)
{
    const Dyadic den(n);
    Dyadic mid = Dyadic::quotient(a.mid, den, p, Rounding::nearest_even);
    Dyadic rad = Dyadic::quotient(a.rad, den.abs(), p + 16, Rounding::ceil) + Dyadic::pow2(-(p + 1));
    return {std::move(mid), tidy_radius(rad, p)};
}

inline Ball widen(const Ball &a, const Dyadic &extra) { return {a.mid, a.rad + extra}; }

} // namespace cauchy::detail

#endif
