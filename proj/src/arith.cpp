#include "gw/arith.hpp"

#include "gw/error.hpp"

#include <algorithm>

namespace gw {

namespace {

BigInt pollard_rho(const BigInt& n)
{
    if (!n.is_odd()) return BigInt(2);
    for (long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        const mpz_class& m = n.mpz();
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= m;
        };
        while (d == 1) {
            step(x);
            step(y);
            step(y);
            mpz_class diff = x - y;
            d = ::gcd(diff, m);
        }
        if (d != m) return BigInt(d);
    }
}

void factor_into(const BigInt& n, std::map<BigInt, int>& out)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.mpz().get_mpz_t(), 40) > 0) {
        out[n] += 1;
        return;
    }
    mpz_class root;
    if (mpz_perfect_square_p(n.mpz().get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.mpz().get_mpz_t());
        std::map<BigInt, int> half;
        factor_into(BigInt(root), half);
        for (auto& [q, e] : half) out[q] += 2 * e;
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool passes_trial_division(const BigInt& n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (!n.is_odd()) return false;
    for (long d = 3; d <= kTrialBound; d += 2) {
        BigInt dd(d);
        if (dd * dd > n) break;
        if ((n % dd).is_zero()) return false;
    }
    return true;
}

bool is_odd_prime(long p)
{
    return p > 2 && passes_trial_division(BigInt(p));
}

void require_odd_prime(long p)
{
    if (!is_odd_prime(p)) throw Error(Errc::BadPrime, std::to_string(p) + " is not an odd prime");
}

std::map<BigInt, int> factor(const BigInt& n)
{
    std::map<BigInt, int> out;
    BigInt m = abs(n);
    if (m.is_zero()) throw Error(Errc::ZeroInput, "cannot factor 0");
    for (long d = 2; d <= kTrialBound; d = (d == 2 ? 3 : d + 2)) {
        BigInt dd(d);
        if (dd * dd > m) break;
        while ((m % dd).is_zero()) {
            out[dd] += 1;
            m /= dd;
        }
    }
    factor_into(m, out);
    return out;
}

SquareClassQ squarefree_part(const Rational& r)
{
    if (r.is_zero()) throw Error(Errc::ZeroInput, "squarefree_part of 0");
    SquareClassQ c;
    c.sign = r.sign();
    for (auto& [q, e] : factor(r.num() * r.den()))
        if (e % 2 == 1) c.primes.push_back(q);
    return c;
}

Rational squarefree_value(const SquareClassQ& c)
{
    BigInt v(c.sign);
    for (const auto& q : c.primes) v *= q;
    return Rational(v);
}

int legendre_symbol(const BigInt& a, long p)
{
    require_odd_prime(p);
    BigInt P(p);
    BigInt r = mod(a, P);
    if (r.is_zero()) return 0;
    BigInt e = powm(r, BigInt((p - 1) / 2), P);
    return e == 1 ? 1 : -1;
}

int legendre_symbol(const Rational& a, long p)
{
    require_odd_prime(p);
    return legendre_symbol(a.num(), p) * legendre_symbol(a.den(), p);
}

PadicSplit padic_split(const Rational& r, const BigInt& p)
{
    if (r.is_zero()) throw Error(Errc::ZeroInput, "padic_split of 0");
    if (!passes_trial_division(p)) throw Error(Errc::BadPrime, "bad prime " + p.str());
    BigInt num = r.num(), den = r.den();
    long j = 0;
    while ((num % p).is_zero()) {
        num /= p;
        ++j;
    }
    while ((den % p).is_zero()) {
        den /= p;
        --j;
    }
    return {j, Rational(num, den)};
}

long valuation(const Rational& r, const BigInt& p) { return padic_split(r, p).j; }

long inverse_mod(long a, long p)
{
    mpz_class r, A = a, P = p;
    if (mpz_invert(r.get_mpz_t(), A.get_mpz_t(), P.get_mpz_t()) == 0)
        throw Error(Errc::ZeroInput, "no inverse mod " + std::to_string(p));
    return r.get_si();
}

FpElement reduce_mod(const Rational& r, long p)
{
    BigInt P(p);
    long num = mod(r.num(), P).to_long();
    long den = mod(r.den(), P).to_long();
    if (den == 0) throw Error(Errc::ZeroInput, "denominator divisible by " + std::to_string(p));
    return {p, static_cast<long>((static_cast<__int128>(num) * inverse_mod(den, p)) % p)};
}

long least_nonsquare(long p)
{
    require_odd_prime(p);
    for (long s = 2;; ++s)
        if (legendre_symbol(BigInt(s), p) == -1) return s;
}

}  // namespace gw
