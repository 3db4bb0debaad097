#include "gw/arith.hpp"
#include "gw/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gw;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

std::vector<BigInt> big(std::initializer_list<long> xs)
{
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

BigInt pow_big(const BigInt& b, long e)
{
    BigInt r(1);
    for (long k = 0; k < e; ++k) r *= b;
    return r;
}

}  // namespace

TEST(Rational, CanonicalForm)
{
    Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.num(), BigInt(-3));
    EXPECT_EQ(r.den(), BigInt(2));
    EXPECT_EQ(Rational("10/4"), q(5, 2));
    EXPECT_EQ(Rational("-7"), q(-7));
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
    EXPECT_THROW(q(1) / q(0), Error);
}

TEST(Rational, LargeValuesStayExact)
{
    BigInt big("123456789012345678901234567890");
    Rational r = Rational(big) / Rational(BigInt(3));
    EXPECT_EQ(r * Rational(BigInt(3)), Rational(big));
    EXPECT_TRUE(r.is_integer());
}

TEST(SquarefreePart, Examples)
{
    EXPECT_EQ(squarefree_part(q(12)), (SquareClassQ{1, big({3})}));
    EXPECT_EQ(squarefree_part(q(1)), (SquareClassQ{1, {}}));
    EXPECT_EQ(squarefree_part(q(-50)), (SquareClassQ{-1, big({2})}));
    EXPECT_EQ(squarefree_part(q(9, 2)), (SquareClassQ{1, big({2})}));
    EXPECT_EQ(squarefree_part(q(-3, 20)), (SquareClassQ{-1, big({3, 5})}));
}

TEST(SquarefreePart, ZeroThrows)
{
    try {
        squarefree_part(q(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroInput);
    }
}

TEST(SquarefreePart, MatchesTrialDivision)
{
    for (long n = 1; n < 3000; ++n) {
        SquareClassQ c = squarefree_part(q(n));
        std::vector<BigInt> expect;
        for (long p : oracle::squarefree_primes(n)) expect.emplace_back(p);
        EXPECT_EQ(c.primes, expect) << n;
        EXPECT_EQ(c.sign, 1);
    }
}

TEST(SquarefreePart, LargePrimeFactors)
{
    // 1000003 and 1000033 are prime and above the trial bound
    BigInt a(1000003L), b(1000033L);
    SquareClassQ c = squarefree_part(Rational(a * a * b * BigInt(7)));
    EXPECT_EQ(c.primes, (std::vector<BigInt>{BigInt(7), b}));
}

TEST(SquarefreePart, SquareScalingInvariant)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-400, 400);
    for (int t = 0; t < 300; ++t) {
        long a = d(rng), b = d(rng), s = d(rng), u = d(rng);
        if (!a || !b || !s || !u) continue;
        Rational r = q(a, b);
        Rational sq = q(s, u) * q(s, u);
        EXPECT_EQ(squarefree_part(r * sq), squarefree_part(r));
        EXPECT_EQ(squarefree_part(r).sign, r.sign());
        EXPECT_EQ(squarefree_part(squarefree_value(squarefree_part(r))), squarefree_part(r));
    }
}

TEST(Legendre, Examples)
{
    EXPECT_EQ(legendre_symbol(BigInt(2), 7), 1);
    EXPECT_EQ(legendre_symbol(BigInt(3), 7), -1);
    EXPECT_EQ(legendre_symbol(BigInt(0), 5), 0);
    EXPECT_EQ(legendre_symbol(BigInt(-1), 5), 1);
    EXPECT_EQ(legendre_symbol(BigInt(-1), 7), -1);
}

TEST(Legendre, BadPrime)
{
    for (long p : {2L, 9L, 1L, 0L, -3L, 91L}) {
        try {
            legendre_symbol(BigInt(3), p);
            FAIL() << p;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::BadPrime);
        }
    }
}

TEST(Legendre, MatchesSquareTable)
{
    for (long p : oracle::odd_primes_below(100)) {
        auto sq = oracle::squares_mod(p);
        for (long a = -2 * p; a <= 2 * p; ++a) {
            int expect = oracle::pmod(a, p) == 0 ? 0 : (sq.count(oracle::pmod(a, p)) ? 1 : -1);
            EXPECT_EQ(legendre_symbol(BigInt(a), p), expect) << a << " mod " << p;
        }
    }
}

TEST(Legendre, Multiplicative)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-10000, 10000);
    for (long p : oracle::odd_primes_below(60))
        for (int t = 0; t < 40; ++t) {
            long a = d(rng), b = d(rng);
            if (a % p == 0 || b % p == 0) continue;
            EXPECT_EQ(legendre_symbol(BigInt(a * b), p), legendre_symbol(BigInt(a), p) * legendre_symbol(BigInt(b), p));
        }
}

TEST(Legendre, RationalArgument)
{
    // 1/2 mod 7 is 4, a square
    EXPECT_EQ(legendre_symbol(q(1, 2), 7), 1);
    // 1/3 mod 7 is 5, a nonsquare
    EXPECT_EQ(legendre_symbol(q(1, 3), 7), -1);
}

TEST(PadicSplit, Examples)
{
    PadicSplit a = padic_split(q(12), BigInt(3));
    EXPECT_EQ(a.j, 1);
    EXPECT_EQ(a.u, q(4));
    PadicSplit b = padic_split(q(1), BigInt(5));
    EXPECT_EQ(b.j, 0);
    EXPECT_EQ(b.u, q(1));
    PadicSplit c = padic_split(q(9, 2), BigInt(3));
    EXPECT_EQ(c.j, 2);
    EXPECT_EQ(c.u, q(1, 2));
    PadicSplit d = padic_split(q(3, 8), BigInt(2));
    EXPECT_EQ(d.j, -3);
    EXPECT_EQ(d.u, q(3));
}

TEST(PadicSplit, Errors)
{
    EXPECT_THROW(padic_split(q(0), BigInt(3)), Error);
    try {
        padic_split(q(5), BigInt(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadPrime);
    }
}

TEST(PadicSplit, RoundTrip)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-100000, 100000);
    std::vector<long> primes = {2};
    for (long p : oracle::odd_primes_below(100)) primes.push_back(p);
    for (int t = 0; t < 500; ++t) {
        long a = d(rng), b = d(rng);
        if (!a || !b) continue;
        long p = primes[t % primes.size()];
        Rational r = q(a, b);
        PadicSplit s = padic_split(r, BigInt(p));
        Rational back = s.u;
        for (long k = 0; k < (s.j < 0 ? -s.j : s.j); ++k) back = s.j < 0 ? back / q(p) : back * q(p);
        EXPECT_EQ(back, r);
        EXPECT_EQ(valuation(s.u, BigInt(p)), 0);
        EXPECT_NE(s.u.num() % BigInt(p), BigInt(0));
        EXPECT_NE(s.u.den() % BigInt(p), BigInt(0));
    }
}

TEST(PadicSplit, LargeExponent)
{
    Rational r = Rational(pow_big(BigInt(7), 40)) * q(3, 5);
    PadicSplit s = padic_split(r, BigInt(7));
    EXPECT_EQ(s.j, 40);
    EXPECT_EQ(s.u, q(3, 5));
}

TEST(FiniteField, ReduceAndInverse)
{
    EXPECT_EQ(reduce_mod(q(1, 2), 7), (FpElement{7, 4}));
    EXPECT_EQ(reduce_mod(q(-1), 5), (FpElement{5, 4}));
    for (long p : oracle::odd_primes_below(50))
        for (long a = 1; a < p; ++a) EXPECT_EQ(a * inverse_mod(a, p) % p, 1);
    EXPECT_THROW(reduce_mod(q(1, 7), 7), Error);
}

TEST(FiniteField, LeastNonsquare)
{
    for (long p : oracle::odd_primes_below(100)) {
        long s = least_nonsquare(p);
        auto sq = oracle::squares_mod(p);
        EXPECT_EQ(sq.count(s), 0u);
        for (long a = 1; a < s; ++a) EXPECT_EQ(sq.count(a), 1u);
    }
}

TEST(Primality, TrialDivision)
{
    for (long n = -5; n < 2000; ++n) EXPECT_EQ(is_odd_prime(n), n != 2 && oracle::small_prime(n)) << n;
    EXPECT_TRUE(passes_trial_division(BigInt(1000003L)));
    EXPECT_FALSE(passes_trial_division(BigInt(1000003L) * BigInt(3)));
}
