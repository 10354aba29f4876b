#ifndef CAUCHY_CREAL_HPP
#define CAUCHY_CREAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <variant>

#include <gmpxx.h>

#include "cauchy/dyadic.hpp"
#include "cauchy/error.hpp"
#include "cauchy/outcome.hpp"

namespace cauchy
{

namespace detail
{

/// A node of the computation graph behind a CReal.
///
/// Subclasses implement evaluate(k), which must return q with |x - q| <= 2^-(k+1)
/// on any grid. approx(k) rounds that onto the grid 2^-(k+1), so the public
/// contract |x - approx(k)| <= 2^-k holds and the output exponent is >= -(k+1).
/// Results are memoized per exact precision, which keeps caching transparent.
class Node
{
public:
    Node() = default;
    Node(const Node &) = delete;
    Node &operator=(const Node &) = delete;
    virtual ~Node() = default;

    Dyadic approx(Precision k) const;

protected:
    virtual Dyadic evaluate(Precision k) const = 0;

private:
    mutable std::mutex mutex_;
    mutable std::map<Precision, Dyadic> cache_;
};

using NodePtr = std::shared_ptr<const Node>;

} // namespace detail

/// Turns the per-node approximation cache on or off process-wide. Observable
/// results are identical either way; tests use this to check that.
void set_approximation_cache(bool enabled);
bool approximation_cache_enabled();

/// A constructive real: a deterministic process producing, for each precision
/// k >= 0, a dyadic within 2^-k of the ideal value.
///
/// Any two approximations satisfy |approx(k1) - approx(k2)| <= 2^-k1 + 2^-k2.
/// Values are immutable and may be shared across threads.
class CReal
{
public:
    /// Zero.
    CReal();
    explicit CReal(detail::NodePtr node);

    static CReal integer(const mpz_class &value);
    static CReal integer(long value) { return integer(mpz_class(value)); }
    /// Throws std::domain_error when den == 0.
    static CReal rational(const mpz_class &num, const mpz_class &den);
    static CReal rational(const mpq_class &q) { return rational(q.get_num(), q.get_den()); }
    static CReal dyadic(const Dyadic &value);

    /// q with |x - q| <= 2^-k and exponent(q) >= -(k+1).
    /// Throws std::invalid_argument for k < 0 and ResourceLimit above max_supported_precision.
    Dyadic approx(Precision k) const;

    const detail::NodePtr &node() const { return node_; }

    friend CReal operator+(const CReal &x, const CReal &y);
    friend CReal operator-(const CReal &x, const CReal &y);
    friend CReal operator*(const CReal &x, const CReal &y);
    CReal operator-() const;

private:
    detail::NodePtr node_;
};

enum class Sign { negative = -1, positive = 1 };

/// Evidence that a real is bounded away from zero: |approx(x, k)| > 2 * 2^-k with
/// the recorded sign, which implies |x| > 2^-k.
struct ApartnessCertificate
{
    Precision precision;
    Sign sign;

    friend bool operator==(const ApartnessCertificate &, const ApartnessCertificate &) = default;
};

/// Recomputes approx(x, cert.precision) and checks the certificate against it.
bool revalidate(const CReal &x, const ApartnessCertificate &cert);

/// The apartness search hit its precision cap. This is NOT evidence that x = 0:
/// it only means |x| <= 2 * 2^-max_precision could not be excluded.
struct NoCertificateFound
{
    Precision max_precision;
};

using ApartnessSearch = std::variant<ApartnessCertificate, NoCertificateFound>;

/// Searches k = start_k, max(k+1, 2k), ... up to max_k for a certificate.
ApartnessSearch find_apart(const CReal &x, Precision start_k, Precision max_k);

/// 1/x. The certificate is revalidated; InvalidCertificate is thrown if it fails.
CReal recip(const CReal &x, const ApartnessCertificate &cert);
/// x / y, with cert certifying y.
CReal divide(const CReal &x, const CReal &y, const ApartnessCertificate &cert);

using Sequence = std::function<CReal(std::uint64_t)>;
using Modulus = std::function<std::uint64_t(Precision)>;

/// Limit of seq given a modulus of convergence: the caller guarantees
/// |seq(m) - L| <= 2^-k for every m >= modulus(k). The modulus is trusted;
/// a wrong one produces a wrong real without any diagnostic.
CReal limit(Sequence seq, Modulus modulus);

/// Sum of terms(0) + terms(1) + ... . The caller guarantees
/// |sum_{n >= tail_bound(k)} terms(n)| <= 2^-(k+1). Trusted like limit().
CReal series_sum(Sequence terms, Modulus tail_bound);

/// Wraps x so that approximations above max_k raise ResourceLimit.
CReal precision_capped(const CReal &x, Precision max_k, std::string what);

/// Semi-decides x < y. Visits k = start_k, max(k+1, 2k), ... up to max_k and
/// compares the balls [approx(k) - 2^-k, approx(k) + 2^-k] of both sides.
/// Proved: x < y. Refuted: y < x. Exhausted: no separation up to max_k, which
/// is what happens when x = y.
ProofOutcome cmp_semidecide(const CReal &x, const CReal &y, Precision start_k, Precision max_k);

/// Integer n = floor(approx(x, 2)) + 2, which satisfies x < n <= x + 9/4.
/// The slack above one is unavoidable: choosing within distance one is not
/// decidable at integer boundaries.
mpz_class archimedean_bound(const CReal &x);

} // namespace cauchy

#endif
