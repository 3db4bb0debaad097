#include "gw/witt.hpp"

#include "gw/arith.hpp"
#include "gw/error.hpp"

#include <set>

namespace gw {

FpStructure witt_fp_structure(long p)
{
    require_odd_prime(p);
    return p % 4 == 1 ? FpStructure::KleinFour : FpStructure::Cyclic4;
}

WittFp WittFp::unary(long p, const Rational& u)
{
    int chi = legendre_symbol(u, p);
    if (chi == 0) throw Error(Errc::ZeroEntry, "unary form with zero entry mod " + std::to_string(p));
    if (witt_fp_structure(p) == FpStructure::KleinFour) return {p, 1, chi == 1 ? 0 : 1};
    return {p, chi == 1 ? 1 : 3, 0};
}

WittR witt_add(const WittR& x, const WittR& y) { return {x.signature + y.signature}; }
WittC witt_add(const WittC& x, const WittC& y) { return {x.rank_mod2 ^ y.rank_mod2}; }

WittFp witt_add(const WittFp& x, const WittFp& y)
{
    if (x.p != y.p) throw Error(Errc::MixedFields, "adding classes over different primes");
    if (x.kind() == FpStructure::KleinFour) return {x.p, x.a ^ y.a, x.b ^ y.b};
    return {x.p, (x.a + y.a) % 4, 0};
}

WittQ witt_add(const WittQ& x, const WittQ& y)
{
    WittQ out;
    out.signature = x.signature + y.signature;
    out.dyadic = x.dyadic ^ y.dyadic;
    out.residues = x.residues;
    for (const auto& [p, c] : y.residues) {
        auto it = out.residues.find(p);
        WittFp s = it == out.residues.end() ? c : witt_add(it->second, c);
        if (s.is_zero())
            out.residues.erase(p);
        else
            out.residues[p] = s;
    }
    return out;
}

WittR witt_neg(const WittR& x) { return {-x.signature}; }
WittC witt_neg(const WittC& x) { return x; }

WittFp witt_neg(const WittFp& x)
{
    if (x.kind() == FpStructure::KleinFour) return x;
    return {x.p, (4 - x.a) % 4, 0};
}

WittQ witt_neg(const WittQ& x)
{
    WittQ out;
    out.signature = -x.signature;
    out.dyadic = x.dyadic;
    for (const auto& [p, c] : x.residues) out.residues[p] = witt_neg(c);
    return out;
}

WittFp class_fp(const DiagonalForm& d)
{
    if (d.field.is_q()) throw Error(Errc::MixedFields, "class_fp needs a prime field");
    WittFp out = WittFp::zero(d.field.p);
    for (const auto& e : d.entries) out = witt_add(out, WittFp::unary(d.field.p, e));
    return out;
}

WittR class_r(const DiagonalForm& d)
{
    WittR out;
    for (const auto& e : d.entries) {
        if (e.is_zero()) throw Error(Errc::ZeroEntry, "zero diagonal entry");
        out.signature += BigInt(e.sign());
    }
    return out;
}

WittC class_c(const DiagonalForm& d) { return {static_cast<int>(d.entries.size() % 2)}; }

std::vector<long> unary_generators(const WittFp& x)
{
    const long p = x.p;
    if (x.kind() == FpStructure::Cyclic4) return std::vector<long>(x.a, 1);
    const long s = least_nonsquare(p);
    if (x.a == 1 && x.b == 0) return {1};
    if (x.a == 1 && x.b == 1) return {s};
    if (x.a == 0 && x.b == 1) return {1, s};
    return {};
}

WittFp residue(const DiagonalForm& d, long p, int i)
{
    require_odd_prime(p);
    if (i != 1 && i != 2) throw Error(Errc::ParseError, "residue index must be 1 or 2");
    WittFp out = WittFp::zero(p);
    for (const auto& e : d.entries) {
        auto [j, u] = padic_split(e, BigInt(p));
        long jm = ((j % 2) + 2) % 2;
        if (jm != i % 2) out = witt_add(out, WittFp::unary(p, u));
    }
    return out;
}

WittQ decompose_q(const DiagonalForm& d)
{
    if (!d.field.is_q()) throw Error(Errc::MixedFields, "decompose_q needs the rationals");
    WittQ out;
    std::set<long> primes;
    for (const auto& e : d.entries) {
        if (e.is_zero()) throw Error(Errc::ZeroEntry, "zero diagonal entry");
        auto sq = squarefree_part(e);
        out.signature += BigInt(sq.sign);
        for (const auto& q : sq.primes) {
            if (!q.fits_long()) throw Error(Errc::BadPrime, "prime " + q.str() + " too large");
            if (q != 2) primes.insert(q.to_long());
        }
        if (valuation(e, BigInt(2)) % 2 != 0) out.dyadic ^= 1;
    }
    for (long p : primes) {
        WittFp r = residue(d, p, 2);
        if (!r.is_zero()) out.residues[p] = r;
    }
    return out;
}

DiagonalForm lift_residues(const WittQ& target)
{
    DiagonalForm out;
    // fix the largest mismatched prime first; p*u only disturbs primes below p
    for (;;) {
        WittQ cur = decompose_q(out);
        std::set<long> primes;
        for (const auto& [p, c] : cur.residues) primes.insert(p);
        for (const auto& [p, c] : target.residues) primes.insert(p);
        long p = 0;
        WittFp delta;
        for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
            auto have = cur.residues.find(*it);
            auto want = target.residues.find(*it);
            WittFp h = have == cur.residues.end() ? WittFp::zero(*it) : have->second;
            WittFp w = want == target.residues.end() ? WittFp::zero(*it) : want->second;
            if (h != w) {
                p = *it;
                delta = witt_add(w, witt_neg(h));
                break;
            }
        }
        if (p == 0) break;
        for (long u : unary_generators(delta)) out.entries.push_back(Rational(p * u));
    }
    if (decompose_q(out).dyadic != target.dyadic) out.entries.push_back(Rational(2));
    BigInt gap = target.signature - decompose_q(out).signature;
    for (; gap > 0; gap -= 1) out.entries.push_back(Rational(1));
    for (; gap < 0; gap += 1) out.entries.push_back(Rational(-1));
    return out;
}

}  // namespace gw
