#include <doctest.h>

#include <random>
#include <thread>

#include <cauchy/creal.hpp>
#include <cauchy/functions.hpp>

#include "support/oracle.hpp"

using namespace cauchy;

namespace
{

mpq_class exact(const Dyadic &x) { return mpq_class(x.mantissa()) * oracle::pow2(x.exponent()); }

bool within(const Dyadic &q, const mpq_class &value, Precision k) { return abs(exact(q) - value) <= oracle::pow2(-k); }

bool within(const Dyadic &q, const oracle::Enclosure &e, Precision k)
{
    const mpq_class tol = oracle::pow2(-k);
    return e.lo - tol <= exact(q) && exact(q) <= e.hi + tol;
}

} // namespace

TEST_CASE("constants")
{
    for (Precision k : {0, 1, 5, 64}) {
        CHECK(CReal::integer(20).approx(k) == Dyadic(mpz_class(5), 2));
    }
    CHECK(CReal::integer(0).approx(50) == Dyadic{});
    CHECK(CReal().approx(3) == Dyadic{});
    CHECK(within(CReal::rational(1, 3).approx(4), mpq_class(1, 3), 4));
    CHECK(CReal::rational(3, 8).approx(2) == Dyadic(mpz_class(3), -3));
    CHECK(CReal::rational(3, 8).approx(1) == Dyadic(mpz_class(1), -1));
    CHECK_THROWS_AS(CReal::rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(CReal::integer(1).approx(-1), std::invalid_argument);
    CHECK_THROWS_AS(CReal::integer(1).approx(max_supported_precision + 1), ResourceLimit);
}

TEST_CASE("approximations stay near the grid")
{
    const CReal x = CReal::rational(22, 7) * pi();
    for (Precision k = 0; k < 80; ++k) {
        const Dyadic q = x.approx(k);
        CHECK((q.is_zero() || q.exponent() >= -(k + 1)));
    }
}

TEST_CASE("field operations")
{
    CHECK((CReal::integer(1) + CReal::integer(1)).approx(10) == Dyadic(2));
    CHECK(within((CReal::rational(1, 3) + CReal::rational(2, 3)).approx(30), mpq_class(1), 30));
    CHECK(within((CReal::rational(1, 3) - CReal::rational(5, 7)).approx(40), mpq_class(1, 3) - mpq_class(5, 7), 40));
    CHECK(within((-CReal::rational(2, 9)).approx(40), mpq_class(-2, 9), 40));
    CHECK(within((CReal::rational(-4, 3) * CReal::rational(9, 11)).approx(40), mpq_class(-12, 11), 40));
    const auto pi_ref = oracle::pi(oracle::pow2(-200));
    CHECK(within((CReal::integer(3) * pi()).approx(10), oracle::Enclosure{3 * pi_ref.lo, 3 * pi_ref.hi}, 10));
    CHECK(within(pi().approx(10), pi_ref, 10));
}

TEST_CASE("multiplication of large and small magnitudes")
{
    const CReal big = CReal::integer(mpz_class(1) << 200);
    const CReal small = CReal::rational(mpz_class(1), mpz_class(3) << 190);
    CHECK(within((big * small).approx(50), mpq_class(1024, 3), 50));
}

TEST_CASE("apartness search")
{
    const auto one = find_apart(CReal::integer(1), 1, 60);
    REQUIRE(std::holds_alternative<ApartnessCertificate>(one));
    CHECK(std::get<ApartnessCertificate>(one).precision == 2);
    CHECK(std::get<ApartnessCertificate>(one).sign == Sign::positive);

    const auto zero = find_apart(CReal::integer(0), 1, 40);
    REQUIRE(std::holds_alternative<NoCertificateFound>(zero));
    CHECK(std::get<NoCertificateFound>(zero).max_precision == 40);

    const CReal gap = pi() - CReal::integer(3);
    const auto g = find_apart(gap, 1, 60);
    REQUIRE(std::holds_alternative<ApartnessCertificate>(g));
    CHECK(std::get<ApartnessCertificate>(g).sign == Sign::positive);
    CHECK(revalidate(gap, std::get<ApartnessCertificate>(g)));

    const auto neg = find_apart(CReal::integer(-2), 1, 60);
    REQUIRE(std::holds_alternative<ApartnessCertificate>(neg));
    CHECK(std::get<ApartnessCertificate>(neg).sign == Sign::negative);
}

TEST_CASE("reciprocal and division")
{
    const CReal three = CReal::integer(3);
    const auto cert = std::get<ApartnessCertificate>(find_apart(three, 1, 60));
    CHECK(within(recip(three, cert).approx(10), mpq_class(1, 3), 10));
    CHECK(within(recip(three, cert).approx(200), mpq_class(1, 3), 200));
    CHECK(within(divide(CReal::integer(2), three, cert).approx(64), mpq_class(2, 3), 64));

    const CReal tiny = CReal::rational(mpz_class(-1), mpz_class(1) << 40);
    const auto tc = std::get<ApartnessCertificate>(find_apart(tiny, 1, 80));
    CHECK(within(recip(tiny, tc).approx(20), mpq_class(-(mpz_class(1) << 40)), 20));

    CHECK_THROWS_AS(recip(CReal::integer(0), ApartnessCertificate{3, Sign::positive}), InvalidCertificate);
    CHECK_THROWS_AS(recip(three, ApartnessCertificate{3, Sign::negative}), InvalidCertificate);
}

TEST_CASE("limits")
{
    const CReal five = limit([](std::uint64_t) { return CReal::integer(5); }, [](Precision) { return 0; });
    CHECK(five.approx(30) == Dyadic(5));

    const CReal one = limit([](std::uint64_t n) { return CReal::integer(1) - CReal::dyadic(Dyadic::pow2(-static_cast<std::int64_t>(n))); },
                            [](Precision k) { return static_cast<std::uint64_t>(k + 1); });
    for (Precision k : {0, 3, 17, 90}) {
        CHECK(within(one.approx(k), mpq_class(1), k));
    }
}

TEST_CASE("series")
{
    const CReal two = series_sum([](std::uint64_t n) { return CReal::dyadic(Dyadic::pow2(-static_cast<std::int64_t>(n))); },
                                 [](Precision k) { return static_cast<std::uint64_t>(k + 2); });
    for (Precision k : {0, 1, 10, 100}) {
        CHECK(within(two.approx(k), mpq_class(2), k));
    }

    const CReal zero = series_sum([](std::uint64_t) { return CReal(); }, [](Precision k) { return static_cast<std::uint64_t>(k); });
    CHECK(zero.approx(40) == Dyadic{});

    // (-1)^n / (2n+1): the tail after N terms is below 1/(2N+1).
    const CReal quarter_pi = series_sum(
        [](std::uint64_t n) { return CReal::rational(n % 2 == 0 ? 1 : -1, 2 * static_cast<long>(n) + 1); },
        [](Precision k) { return std::uint64_t{1} << (k + 1); });
    const auto pi_ref = oracle::pi(oracle::pow2(-60));
    CHECK(within(quarter_pi.approx(10), oracle::Enclosure{pi_ref.lo / 4, pi_ref.hi / 4}, 10));
}

TEST_CASE("precision cap")
{
    const CReal capped = precision_capped(CReal::rational(1, 3), 10, "third");
    CHECK(within(capped.approx(9), mpq_class(1, 3), 9));
    CHECK_THROWS_AS(capped.approx(11), ResourceLimit);
}

TEST_CASE("comparison semi-decision")
{
    const ProofOutcome a = cmp_semidecide(CReal::integer(0), pi(), 1, 60);
    CHECK(a.verdict == Verdict::proved);
    CHECK(a.precision == 1);
    CHECK(verify_outcome(a, true));

    const ProofOutcome b = cmp_semidecide(CReal::integer(1), CReal::integer(1), 1, 20);
    CHECK(b.verdict == Verdict::exhausted);
    CHECK(b.precision == 20);
    CHECK(b.trace.back().precision == 20);

    const ProofOutcome c = cmp_semidecide(pi(), CReal::integer(3), 1, 60);
    CHECK(c.verdict == Verdict::refuted);
    CHECK(verify_outcome(c, true));

    const ProofOutcome gap = cmp_semidecide(exp(pi()) - pi(), CReal::integer(20), 1, 200);
    CHECK(gap.verdict == Verdict::proved);
    CHECK(gap.precision >= 11);
    CHECK(gap.precision <= 16);

    std::vector<Precision> visited;
    for (const auto &s : b.trace) {
        visited.push_back(s.precision);
    }
    CHECK(visited == std::vector<Precision>{1, 2, 4, 8, 16, 20});
}

TEST_CASE("deepening schedule")
{
    CHECK(next_precision(0, 100) == 1);
    CHECK(next_precision(1, 100) == 2);
    CHECK(next_precision(3, 100) == 6);
    CHECK(next_precision(64, 100) == 100);
}

TEST_CASE("outcome verification rejects tampering")
{
    ProofOutcome o = cmp_semidecide(CReal::integer(0), CReal::integer(1), 1, 60);
    REQUIRE(o.verdict == Verdict::proved);
    CHECK(verify_outcome(o, true));
    CHECK_FALSE(verify_outcome(o, false));
    ProofOutcome flipped = o;
    flipped.verdict = Verdict::refuted;
    CHECK_FALSE(verify_outcome(flipped, true));
    ProofOutcome shifted = o;
    shifted.trace.back().lhs.upper = Dyadic(2);
    CHECK_FALSE(verify_outcome(shifted, true));
}

TEST_CASE("archimedean bound")
{
    CHECK(archimedean_bound(CReal::integer(0)) == 2);
    const mpz_class p = archimedean_bound(pi());
    CHECK((p == 4 || p == 5));
    const mpz_class m = archimedean_bound(CReal::rational(-7, 2));
    CHECK((m == -2 || m == -1));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const mpq_class q(static_cast<long>(rng() % 20001) - 10000, 1 + static_cast<long>(rng() % 97));
        const mpz_class n = archimedean_bound(CReal::rational(q));
        CHECK(q < n);
        CHECK(n <= q + mpq_class(9, 4));
    }
}

TEST_CASE("cache is transparent")
{
    const auto sample = [] {
        const CReal x = exp(CReal::rational(1, 3)) * sin(pi() - CReal::rational(1, 7)) +
                        cos(CReal::integer(2));
        std::vector<Dyadic> out;
        for (Precision k : {3, 40, 7, 40, 90, 3}) {
            out.push_back(x.approx(k));
        }
        return out;
    };
    set_approximation_cache(true);
    const auto cached = sample();
    set_approximation_cache(false);
    const auto uncached = sample();
    set_approximation_cache(true);
    CHECK(cached == uncached);
}

TEST_CASE("shared values are safe across threads")
{
    const CReal x = exp(pi()) - pi();
    std::vector<Dyadic> results(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&, i] { results[i] = x.approx(60 + static_cast<Precision>(i % 2)); });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (std::size_t i = 2; i < results.size(); ++i) {
        CHECK(results[i] == results[i % 2]);
    }
}
