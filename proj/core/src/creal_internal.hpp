#ifndef CAUCHY_SRC_CREAL_INTERNAL_HPP
#define CAUCHY_SRC_CREAL_INTERNAL_HPP

#include "cauchy/dyadic.hpp"

namespace cauchy::detail
{

/// Smallest b >= 0 with |bound| <= 2^b.
Precision magnitude_bits(const Dyadic &bound);

} // namespace cauchy::detail

#endif
