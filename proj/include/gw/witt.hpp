#pragma once

#include "gw/forms.hpp"

#include <map>
#include <vector>

namespace gw {

enum class FpStructure { KleinFour, Cyclic4 };

FpStructure witt_fp_structure(long p);

struct WittR {
    BigInt signature;
    friend bool operator==(const WittR&, const WittR&) = default;
};

struct WittC {
    int rank_mod2 = 0;
    friend bool operator==(const WittC&, const WittC&) = default;
};

// p = 1 mod 4: a = rank mod 2, b = 1 iff the discriminant is a nonsquare.
// p = 3 mod 4: a = (#squares - #nonsquares) mod 4, b unused.
struct WittFp {
    long p = 3;
    int a = 0;
    int b = 0;

    FpStructure kind() const { return witt_fp_structure(p); }
    bool is_zero() const { return a == 0 && b == 0; }

    static WittFp zero(long p) { return {p, 0, 0}; }
    static WittFp unary(long p, const Rational& u);

    friend bool operator==(const WittFp&, const WittFp&) = default;
};

struct WittQ {
    BigInt signature;
    int dyadic = 0;
    std::map<long, WittFp> residues;

    bool is_zero() const { return signature.is_zero() && dyadic == 0 && residues.empty(); }

    friend bool operator==(const WittQ&, const WittQ&) = default;
};

WittR witt_add(const WittR& x, const WittR& y);
WittC witt_add(const WittC& x, const WittC& y);
WittFp witt_add(const WittFp& x, const WittFp& y);
WittQ witt_add(const WittQ& x, const WittQ& y);
WittR witt_neg(const WittR& x);
WittC witt_neg(const WittC& x);
WittFp witt_neg(const WittFp& x);
WittQ witt_neg(const WittQ& x);
inline bool is_zero(const WittR& x) { return x.signature.is_zero(); }
inline bool is_zero(const WittC& x) { return x.rank_mod2 == 0; }
inline bool is_zero(const WittFp& x) { return x.is_zero(); }
inline bool is_zero(const WittQ& x) { return x.is_zero(); }

WittFp class_fp(const DiagonalForm& d);
WittR class_r(const DiagonalForm& d);
WittC class_c(const DiagonalForm& d);

// sum of unary generators representing x, as lifts in [1, p-1]
std::vector<long> unary_generators(const WittFp& x);

WittFp residue(const DiagonalForm& d, long p, int i);

WittQ decompose_q(const DiagonalForm& d);

DiagonalForm lift_residues(const WittQ& target);

}  // namespace gw
