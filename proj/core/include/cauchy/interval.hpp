#ifndef CAUCHY_INTERVAL_HPP
#define CAUCHY_INTERVAL_HPP

#include <string>

#include "cauchy/dyadic.hpp"

namespace cauchy
{

/// Closed dyadic interval [lower, upper]. Well-formed iff lower <= upper.
struct Interval
{
    Dyadic lower;
    Dyadic upper;

    /// [center - radius, center + radius]
    static Interval ball(const Dyadic &center, const Dyadic &radius) { return {center - radius, center + radius}; }
    static Interval point(const Dyadic &x) { return {x, x}; }

    bool well_formed() const { return lower <= upper; }
    Dyadic width() const { return upper - lower; }
    bool contains(const Dyadic &x) const { return lower <= x && x <= upper; }
    bool contains(const Interval &inner) const { return lower <= inner.lower && inner.upper <= upper; }

    /// Both intervals well-formed and overlapping.
    bool intersects(const Interval &other) const
    {
        return well_formed() && other.well_formed() && !(upper < other.lower) && !(other.upper < lower);
    }
    /// Every point of *this lies strictly below every point of other.
    bool strictly_below(const Interval &other) const { return upper < other.lower; }

    std::string to_string() const { return "[" + lower.to_string() + ", " + upper.to_string() + "]"; }

    friend bool operator==(const Interval &, const Interval &) = default;
};

} // namespace cauchy

#endif
