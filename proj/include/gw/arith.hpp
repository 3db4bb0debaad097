#pragma once

#include "gw/number.hpp"

#include <map>
#include <vector>

namespace gw {

struct FpElement {
    long p = 3;
    long value = 0;

    friend bool operator==(const FpElement&, const FpElement&) = default;
};

// a*(Q^x)^2 as a sign and the sorted primes of the square-free part
struct SquareClassQ {
    int sign = 1;
    std::vector<BigInt> primes;

    friend bool operator==(const SquareClassQ&, const SquareClassQ&) = default;
};

struct PadicSplit {
    long j = 0;
    Rational u;
};

constexpr long kTrialBound = 1000000;

// Deterministic trial division up to min(sqrt(n), kTrialBound).
bool passes_trial_division(const BigInt& n);
bool is_odd_prime(long p);
// throws BadPrime unless p is an odd prime
void require_odd_prime(long p);

std::map<BigInt, int> factor(const BigInt& n);

SquareClassQ squarefree_part(const Rational& r);
Rational squarefree_value(const SquareClassQ& c);

int legendre_symbol(const BigInt& a, long p);
int legendre_symbol(const Rational& a, long p);

PadicSplit padic_split(const Rational& r, const BigInt& p);
long valuation(const Rational& r, const BigInt& p);

// reduction of a p-integral rational into F_p
FpElement reduce_mod(const Rational& r, long p);
long inverse_mod(long a, long p);
long least_nonsquare(long p);

}  // namespace gw
