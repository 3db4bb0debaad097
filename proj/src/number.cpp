#include "gw/number.hpp"

#include "gw/error.hpp"

#include <ostream>

namespace gw {

BigInt::BigInt(const std::string& s)
{
    if (v_.set_str(s, 10) != 0) throw Error(Errc::ParseError, "bad integer '" + s + "'");
}

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.mpz()))); }

BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(::gcd(a.mpz(), b.mpz()))); }

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt(q);
}

BigInt mod(const BigInt& a, const BigInt& b)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt(r);
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& m)
{
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(), m.mpz().get_mpz_t());
    return BigInt(r);
}

std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.str(); }

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den.is_zero()) throw Error(Errc::ZeroInput, "zero denominator");
    v_ = mpq_class(num.mpz(), den.mpz());
    v_.canonicalize();
}

Rational::Rational(const std::string& s)
{
    auto slash = s.find('/');
    BigInt num(s.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1));
    *this = Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw Error(Errc::ZeroInput, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace gw
