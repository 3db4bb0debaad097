#pragma once

#include "gw/number.hpp"

#include <optional>
#include <vector>

namespace gw {

// Q or F_p; F_p elements are stored as integer Rationals in [0, p).
struct FieldTag {
    enum class Kind { Q, Fp };
    Kind kind = Kind::Q;
    long p = 0;

    static FieldTag rationals() { return {}; }
    static FieldTag prime(long p);

    bool is_q() const { return kind == Kind::Q; }
    Rational normalize(const Rational& x) const;
    Rational inverse(const Rational& x) const;

    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

struct GramForm {
    FieldTag field;
    MatQ gram;

    Eigen::Index dim() const { return gram.rows(); }
};

struct DiagonalForm {
    FieldTag field;
    std::vector<Rational> entries;

    std::size_t rank() const { return entries.size(); }
};

struct Diagonalization {
    DiagonalForm d;
    MatQ q;  // q * gram * q^T = diag(d, 0, ..., 0)
};

// Field-aware elimination helpers. Basis vectors are rows.
MatQ normalized(const MatQ& m, const FieldTag& f);
MatQ product(const MatQ& a, const MatQ& b, const FieldTag& f);
Eigen::Index rank(const MatQ& m, const FieldTag& f);
Rational determinant(const MatQ& m, const FieldTag& f);
MatQ kernel(const MatQ& m, const FieldTag& f);

GramForm make_gram(const FieldTag& f, const MatQ& gram);
GramForm to_gram(const DiagonalForm& d);
DiagonalForm direct_sum(const DiagonalForm& a, const DiagonalForm& b);
GramForm direct_sum(const GramForm& a, const GramForm& b);
DiagonalForm negate(const DiagonalForm& d);
GramForm negate(const GramForm& g);

Diagonalization diagonalize(const GramForm& f);

MatQ orthogonal_complement(const GramForm& f, const MatQ& w);

GramForm hyperbolic_form(int m, const FieldTag& f = FieldTag::rationals());

constexpr long kSearchBound = 10000000;

std::optional<VecQ> find_isotropic_fp(const GramForm& f);

DiagonalForm anisotropic_part_fp(const GramForm& f);

}  // namespace gw
