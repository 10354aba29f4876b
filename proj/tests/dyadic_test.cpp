#include <doctest.h>

#include <random>

#include <cauchy/dyadic.hpp>

#include "support/oracle.hpp"

using cauchy::Dyadic;
using cauchy::Rounding;

namespace
{

Dyadic d(long m, std::int64_t e) { return Dyadic(mpz_class(m), e); }

mpq_class exact(const Dyadic &x) { return mpq_class(x.mantissa()) * oracle::pow2(x.exponent()); }

} // namespace

TEST_CASE("canonical form")
{
    CHECK(d(4, 0).mantissa() == 1);
    CHECK(d(4, 0).exponent() == 2);
    CHECK(d(0, 17) == Dyadic{});
    CHECK(d(0, 17).exponent() == 0);
    CHECK(d(-6, -3) == d(-3, -2));
}

TEST_CASE("ring operations are exact")
{
    CHECK(d(1, 0) + d(1, 0) == d(1, 1));
    CHECK(d(3, -1) * d(5, -2) == d(15, -3));
    CHECK(d(1, -1) < d(3, -2));
    CHECK(d(3, -2) - d(3, -2) == Dyadic{});
    CHECK(-d(5, 3) == d(-5, 3));
    CHECK(d(-5, 3).abs() == d(5, 3));
    CHECK(d(3, 0).ldexp(-4) == d(3, -4));
}

TEST_CASE("ring operations agree with rationals")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> mant(-100000, 100000);
    std::uniform_int_distribution<int> ex(-80, 80);
    for (int i = 0; i < 2000; ++i) {
        const Dyadic a = d(mant(rng), ex(rng));
        const Dyadic b = d(mant(rng), ex(rng));
        CHECK(exact(a + b) == exact(a) + exact(b));
        CHECK(exact(a - b) == exact(a) - exact(b));
        CHECK(exact(a * b) == exact(a) * exact(b));
        CHECK(((a < b) == (exact(a) < exact(b))));
        CHECK(((a == b) == (exact(a) == exact(b))));
    }
}

TEST_CASE("round_to examples")
{
    CHECK(d(5, -4).round_to(2) == d(1, -2));
    CHECK(d(1, 3).round_to(10) == d(1, 3));
    CHECK(d(3, -2).round_to(0) == d(1, 0));
    // genuine ties go to the even neighbour
    CHECK(d(1, -1).round_to(0) == Dyadic{});
    CHECK(d(3, -1).round_to(0) == d(2, 0));
    CHECK(d(-3, -1).round_to(0) == d(-2, 0));
    CHECK(d(5, -3).round_to(2) == d(1, -1));
}

TEST_CASE("rounding modes respect the grid and the error bound")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> mant(-1000000, 1000000);
    std::uniform_int_distribution<int> ex(-60, 20);
    std::uniform_int_distribution<int> prec(-5, 40);
    for (int i = 0; i < 2000; ++i) {
        const Dyadic x = d(mant(rng), ex(rng));
        const int k = prec(rng);
        const Dyadic r = x.round_to(k);
        const Dyadic f = x.floor_to(k);
        const Dyadic c = x.ceil_to(k);
        CHECK(abs(exact(r) - exact(x)) <= oracle::pow2(-k - 1));
        CHECK(f <= x);
        CHECK(x <= c);
        CHECK(exact(c) - exact(f) <= oracle::pow2(-k));
        for (const Dyadic &g : {r, f, c}) {
            CHECK((g.is_zero() || g.exponent() >= -k));
        }
    }
}

TEST_CASE("quotient rounding")
{
    CHECK(Dyadic::quotient(1, 3, 4, Rounding::floor) == d(5, -4));
    CHECK(Dyadic::quotient(1, 3, 4, Rounding::ceil) == d(3, -3));
    CHECK(Dyadic::quotient(-1, 3, 4, Rounding::floor) == d(-3, -3));
    CHECK(Dyadic::quotient(1, 3, 4, Rounding::nearest_even) == d(5, -4));
    CHECK_THROWS(Dyadic::quotient(1, 0, 4, Rounding::floor));
}

TEST_CASE("floor, ceil and logarithms")
{
    CHECK(d(7, -1).floor() == 3);
    CHECK(d(7, -1).ceil() == 4);
    CHECK(d(-7, -1).floor() == -4);
    CHECK(d(-7, -1).ceil() == -3);
    CHECK(d(1, 5).ceil_log2_abs() == 5);
    CHECK(d(3, 5).ceil_log2_abs() == 7);
    CHECK(d(3, 5).floor_log2_abs() == 6);
    CHECK_THROWS_AS(Dyadic{}.ceil_log2_abs(), std::domain_error);
}

TEST_CASE("decimal rendering")
{
    CHECK(d(1, -1).to_decimal_string(3) == "0.500");
    CHECK(d(-3, -2).to_decimal_string(2) == "-0.75");
    CHECK(d(1, -4).to_decimal_string(2) == "0.06");
    CHECK(Dyadic{}.to_decimal_string(4) == "0.0000");
    CHECK(d(-1, -10).to_decimal_string(2) == "0.00");
    CHECK(d(20, 0).to_decimal_string(1) == "20.0");
    CHECK_THROWS(d(1, 0).to_decimal_string(0));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> mant(-1000000, 1000000);
    std::uniform_int_distribution<int> ex(-40, 10);
    for (int i = 0; i < 500; ++i) {
        const Dyadic x = d(mant(rng), ex(rng));
        const std::string s = x.to_decimal_string(6);
        // half a unit in the last place
        const mpq_class printed(mpq_class(s.substr(0, s.find('.')) + s.substr(s.find('.') + 1), 10) / 1000000);
        CHECK(abs(printed - exact(x)) * 2000000 <= 1);
    }
}

TEST_CASE("bit-exact text form")
{
    CHECK(d(3, -5).to_string() == "3*2^-5");
    CHECK(Dyadic{}.to_string() == "0*2^0");
}

TEST_CASE("exponent overflow is reported")
{
    const Dyadic big = Dyadic::pow2(std::numeric_limits<std::int64_t>::max() - 1);
    CHECK_THROWS_AS(big * big, cauchy::ExponentOverflow);
}
