#include "gw/forms.hpp"

#include "gw/arith.hpp"
#include "gw/error.hpp"

#include <cmath>

namespace gw {

FieldTag FieldTag::prime(long p)
{
    require_odd_prime(p);
    return {Kind::Fp, p};
}

Rational FieldTag::normalize(const Rational& x) const
{
    if (is_q()) return x;
    return Rational(reduce_mod(x, p).value);
}

Rational FieldTag::inverse(const Rational& x) const
{
    if (x.is_zero()) throw Error(Errc::ZeroInput, "inverse of 0");
    if (is_q()) return Rational(1) / x;
    return Rational(inverse_mod(reduce_mod(x, p).value, p));
}

MatQ normalized(const MatQ& m, const FieldTag& f)
{
    if (f.is_q()) return m;
    return m.unaryExpr([&](const Rational& x) { return f.normalize(x); });
}

MatQ product(const MatQ& a, const MatQ& b, const FieldTag& f)
{
    return normalized(a * b, f);
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> echelon(MatQ& a, const FieldTag& f, Rational* det = nullptr)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    if (det) *det = Rational(1);
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < a.rows(); ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            a.row(piv).swap(a.row(r));
            if (det) *det = -*det;
        }
        Rational inv = f.inverse(a(r, c));
        if (det) *det = f.normalize(*det * a(r, c));
        a.row(r) = normalized(a.row(r) * inv, f);
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational k = a(i, c);
            a.row(i) = normalized(a.row(i) - k * a.row(r), f);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Eigen::Index rank(const MatQ& m, const FieldTag& f)
{
    MatQ a = normalized(m, f);
    return static_cast<Eigen::Index>(echelon(a, f).size());
}

Rational determinant(const MatQ& m, const FieldTag& f)
{
    if (m.rows() != m.cols()) throw Error(Errc::ZeroInput, "determinant of non-square matrix");
    MatQ a = normalized(m, f);
    Rational det;
    auto piv = echelon(a, f, &det);
    if (static_cast<Eigen::Index>(piv.size()) < m.rows()) return Rational(0);
    return f.normalize(det);
}

MatQ kernel(const MatQ& m, const FieldTag& f)
{
    MatQ a = normalized(m, f);
    auto piv = echelon(a, f);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    MatQ out(a.cols() - static_cast<Eigen::Index>(piv.size()), a.cols());
    Eigen::Index row = 0;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        VecQ v = VecQ::Zero(a.cols());
        v(free) = Rational(1);
        for (std::size_t k = 0; k < piv.size(); ++k)
            v(piv[k]) = f.normalize(-a(static_cast<Eigen::Index>(k), free));
        out.row(row++) = v.transpose();
    }
    return out;
}

GramForm make_gram(const FieldTag& f, const MatQ& gram)
{
    if (gram.rows() != gram.cols()) throw Error(Errc::ParseError, "gram matrix not square");
    MatQ g = normalized(gram, f);
    if (g != g.transpose()) throw Error(Errc::ParseError, "gram matrix not symmetric");
    return {f, g};
}

GramForm to_gram(const DiagonalForm& d)
{
    auto n = static_cast<Eigen::Index>(d.entries.size());
    MatQ g = MatQ::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) g(i, i) = d.field.normalize(d.entries[i]);
    return {d.field, g};
}

DiagonalForm direct_sum(const DiagonalForm& a, const DiagonalForm& b)
{
    if (!(a.field == b.field)) throw Error(Errc::MixedFields, "direct sum over different fields");
    DiagonalForm out = a;
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    return out;
}

GramForm direct_sum(const GramForm& a, const GramForm& b)
{
    if (!(a.field == b.field)) throw Error(Errc::MixedFields, "direct sum over different fields");
    MatQ g = MatQ::Zero(a.dim() + b.dim(), a.dim() + b.dim());
    g.topLeftCorner(a.dim(), a.dim()) = a.gram;
    g.bottomRightCorner(b.dim(), b.dim()) = b.gram;
    return {a.field, g};
}

DiagonalForm negate(const DiagonalForm& d)
{
    DiagonalForm out = d;
    for (auto& e : out.entries) e = d.field.normalize(-e);
    return out;
}

GramForm negate(const GramForm& g) { return {g.field, normalized(-g.gram, g.field)}; }

Diagonalization diagonalize(const GramForm& f)
{
    const FieldTag& k = f.field;
    const Eigen::Index n = f.dim();
    MatQ a = normalized(f.gram, k);
    MatQ q = MatQ::Identity(n, n);

    auto add_to = [&](Eigen::Index i, Eigen::Index j, const Rational& c) {
        // row_i += c row_j and col_i += c col_j
        a.row(i) = normalized(a.row(i) + c * a.row(j), k);
        a.col(i) = normalized(a.col(i) + c * a.col(j), k);
        q.row(i) = normalized(q.row(i) + c * q.row(j), k);
    };
    auto swap = [&](Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        a.col(i).swap(a.col(j));
        q.row(i).swap(q.row(j));
    };

    Eigen::Index r = 0;
    for (; r < n; ++r) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < n && piv < 0; ++i)
            if (!a(i, i).is_zero()) piv = i;
        if (piv < 0) {
            for (Eigen::Index i = r; i < n && piv < 0; ++i)
                for (Eigen::Index j = r; j < n; ++j)
                    if (i != j && !a(i, j).is_zero()) {
                        add_to(i, j, Rational(1));
                        piv = i;
                        break;
                    }
        }
        if (piv < 0) break;
        swap(r, piv);
        Rational inv = k.inverse(a(r, r));
        for (Eigen::Index i = r + 1; i < n; ++i) {
            if (a(i, r).is_zero()) continue;
            add_to(i, r, k.normalize(-a(i, r) * inv));
        }
    }

    Diagonalization out;
    out.d.field = k;
    for (Eigen::Index i = 0; i < r; ++i) out.d.entries.push_back(a(i, i));
    out.q = q;
    return out;
}

MatQ orthogonal_complement(const GramForm& f, const MatQ& w)
{
    if (determinant(f.gram, f.field).is_zero()) throw Error(Errc::SingularForm, "form is singular");
    if (w.cols() != f.dim()) throw Error(Errc::DependentBasis, "subspace basis has wrong length");
    if (rank(w, f.field) != w.rows()) throw Error(Errc::DependentBasis, "subspace basis is dependent");
    if (w.rows() == 0) return MatQ::Identity(f.dim(), f.dim());
    return kernel(product(w, f.gram, f.field), f.field);
}

GramForm hyperbolic_form(int m, const FieldTag& f)
{
    MatQ g = MatQ::Zero(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        g(i, m + i) = Rational(1);
        g(m + i, i) = Rational(1);
    }
    return {f, g};
}

std::optional<VecQ> find_isotropic_fp(const GramForm& f)
{
    if (f.field.is_q()) throw Error(Errc::MixedFields, "find_isotropic_fp needs a prime field");
    const long p = f.field.p;
    const Eigen::Index n = f.dim();
    double space = std::pow(static_cast<double>(p), static_cast<double>(n));
    if (space > static_cast<double>(kSearchBound))
        throw Error(Errc::SearchSpaceTooLarge, "p^dim exceeds search bound");

    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g[i][j] = reduce_mod(f.gram(i, j), p).value;

    std::vector<long> v(n);
    for (Eigen::Index lead = 0; lead < n; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
            long s = 0;
            for (Eigen::Index i = lead; i < n; ++i) {
                if (v[i] == 0) continue;
                long row = 0;
                for (Eigen::Index j = lead; j < n; ++j) row = (row + g[i][j] * v[j]) % p;
                s = (s + row * v[i]) % p;
            }
            if (s == 0) {
                VecQ out(n);
                for (Eigen::Index i = 0; i < n; ++i) out(i) = Rational(v[i]);
                return out;
            }
            Eigen::Index i = lead + 1;
            while (i < n && ++v[i] == p) v[i++] = 0;
            if (i == n) break;
        }
    }
    return std::nullopt;
}

DiagonalForm anisotropic_part_fp(const GramForm& f)
{
    if (f.field.is_q()) throw Error(Errc::MixedFields, "anisotropic_part_fp needs a prime field");
    const FieldTag& k = f.field;
    if (determinant(f.gram, k).is_zero()) throw Error(Errc::SingularForm, "form is singular");
    GramForm cur{k, normalized(f.gram, k)};
    while (cur.dim() > 0) {
        auto v = find_isotropic_fp(cur);
        if (!v) break;
        VecQ gv = normalized(cur.gram * *v, k);
        Eigen::Index i = 0;
        while (gv(i).is_zero()) ++i;
        MatQ plane = MatQ::Zero(2, cur.dim());
        plane.row(0) = v->transpose();
        plane(1, i) = k.inverse(gv(i));
        MatQ b = orthogonal_complement(cur, plane);
        cur.gram = product(product(b, cur.gram, k), b.transpose(), k);
    }
    return diagonalize(cur).d;
}

}  // namespace gw
