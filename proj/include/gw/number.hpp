#pragma once

// Thin value wrappers over gmpxx. The gmpxx expression templates do not mix
// with Eigen's, so every operator here returns a concrete value.

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace gw {

class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : v_(v) {}
    BigInt(long v) : v_(v) {}
    BigInt(long long v) : v_(static_cast<long>(v)) {}
    BigInt(unsigned long v) : v_(v) {}
    explicit BigInt(const mpz_class& v) : v_(v) {}
    explicit BigInt(const std::string& s);

    const mpz_class& mpz() const { return v_; }
    mpz_class& mpz() { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }
    std::string str() const { return v_.get_str(); }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
    // truncating division, as in C++
    BigInt& operator/=(const BigInt& o) { v_ /= o.v_; return *this; }
    BigInt& operator%=(const BigInt& o) { v_ %= o.v_; return *this; }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpz_class v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
// floor division and the matching nonnegative remainder for b > 0
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod(const BigInt& a, const BigInt& b);
BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& m);
std::ostream& operator<<(std::ostream& os, const BigInt& a);

class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(const BigInt& v) : v_(v.mpz()) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    // accepts "a", "-a", "a/b"
    explicit Rational(const std::string& s);

    const mpq_class& mpq() const { return v_; }

    BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

Rational abs(const Rational& a);
std::ostream& operator<<(std::ostream& os, const Rational& a);

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using MatZ = Mat<BigInt>;

}  // namespace gw

namespace Eigen {

template <>
struct NumTraits<gw::BigInt> : GenericNumTraits<gw::BigInt> {
    typedef gw::BigInt Real;
    typedef gw::BigInt NonInteger;
    typedef gw::BigInt Literal;
    typedef gw::BigInt Nested;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 60
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<gw::Rational> : GenericNumTraits<gw::Rational> {
    typedef gw::Rational Real;
    typedef gw::Rational NonInteger;
    typedef gw::Rational Literal;
    typedef gw::Rational Nested;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 120,
        MulCost = 240
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
