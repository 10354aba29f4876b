#ifndef CAUCHY_FUNCTIONS_HPP
#define CAUCHY_FUNCTIONS_HPP

#include <cstdint>
#include <string_view>

#include <gmpxx.h>

#include "cauchy/creal.hpp"

namespace cauchy
{

/// e^x. The approximant of x is halved m times into [-1, 1], summed by Taylor
/// series, and squared back m times.
CReal exp(const CReal &x);

/// sin and cos reduce with the triple-angle identities until |x| / 3^m <= 1,
/// so neither depends on knowing pi.
CReal sin(const CReal &x);
CReal cos(const CReal &x);

/// tan(x) = sin(x) / cos(x); cos_cert certifies cos(x) apart from zero.
CReal tan(const CReal &x, const ApartnessCertificate &cos_cert);

/// Natural logarithm; cert must certify x positive.
CReal ln(const CReal &x, const ApartnessCertificate &cert);

/// arctan(u) for rational |u| <= 1/2 (throws std::domain_error otherwise).
CReal atan_rat(const mpq_class &u);

enum class PiMethod {
    machin,       ///< 16 atan(1/5) - 4 atan(1/239); the production definition
    leibniz,      ///< 4 * sum (-1)^i / (2i+1); needs about 2^k terms
    cos_iteration ///< 2 * lim p_n with p_0 = 0, p_n = p_{n-1} + cos(p_{n-1})
};

std::string_view to_string(PiMethod m);

inline constexpr Precision default_leibniz_cap = 24;

/// Pi by the chosen method. The Leibniz route raises ResourceLimit for requests
/// above leibniz_cap.
CReal pi(PiMethod method = PiMethod::machin, Precision leibniz_cap = default_leibniz_cap);

/// Index n of the cos iteration with |p_n - pi/2| <= 2^-k.
///
/// With u_n = p_n - pi/2 the iteration is u_{n+1} = u_n - sin(u_n), and
/// |u - sin u| <= |u|^3 / 6. Starting from |u_1| = |1 - pi/2| <= 19/32 the
/// bounds B_{n+1} = B_n^3 / 6 give (as powers of two, rounded up):
///
///   n    : 1     2      3       4       5        6
///   B_n  : 2^0   2^-4   2^-17   2^-53   2^-164   2^-495
///
/// so precision 60 needs n = 5 and precision 100 needs n = 5 as well.
std::uint64_t cos_iteration_modulus(Precision k);

} // namespace cauchy

#endif
