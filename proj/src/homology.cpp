#include "gw/homology.hpp"

#include "gw/error.hpp"

#include <string>

namespace gw {

RankKernel rank_kernel_f2(const MatF2& m)
{
    MatF2 a = m;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.row(piv).swap(a.row(r));
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != r && a(i, c))
                for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) ^= a(r, j);
        ++r;
    }
    return {r, m.cols() - r};
}

MatF2 multiply_f2(const MatF2& a, const MatF2& b)
{
    if (a.cols() != b.rows()) throw Error(Errc::NotAComplex, "dimension mismatch in product");
    MatF2 out = MatF2::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (a(i, k) & 1)
                for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) ^= b(k, j) & 1;
    return out;
}

bool is_zero_f2(const MatF2& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) & 1) return false;
    return true;
}

MatZ lift(const MatF2& m)
{
    return m.unaryExpr([](std::uint8_t b) { return BigInt(static_cast<int>(b & 1)); });
}

MatF2 reduce_f2(const MatZ& m)
{
    return m.unaryExpr([](const BigInt& b) { return static_cast<std::uint8_t>(b.is_odd() ? 1 : 0); });
}

SNFResult smith_normal_form(const MatZ& a)
{
    const Eigen::Index m = a.rows(), n = a.cols();
    MatZ d = a;
    MatZ u = MatZ::Identity(m, m);
    MatZ v = MatZ::Identity(n, n);

    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
        while (true) {
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = t; i < m; ++i)
                for (Eigen::Index j = t; j < n; ++j)
                    if (!d(i, j).is_zero() && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return {u, d, v};
            d.row(pi).swap(d.row(t));
            u.row(pi).swap(u.row(t));
            d.col(pj).swap(d.col(t));
            v.col(pj).swap(v.col(t));

            const BigInt p = d(t, t);
            bool dirty = false;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (d(i, t).is_zero()) continue;
                BigInt q = floor_div(d(i, t), p);
                d.row(i) -= q * d.row(t);
                u.row(i) -= q * u.row(t);
                dirty = dirty || !d(i, t).is_zero();
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (d(t, j).is_zero()) continue;
                BigInt q = floor_div(d(t, j), p);
                d.col(j) -= q * d.col(t);
                v.col(j) -= q * v.col(t);
                dirty = dirty || !d(t, j).is_zero();
            }
            if (dirty) continue;

            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (!mod(d(i, j), abs(p)).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            d.row(t) += d.row(bad);
            u.row(t) += u.row(bad);
        }
        if (d(t, t).sign() < 0) {
            d.row(t) = -d.row(t);
            u.row(t) = -u.row(t);
        }
    }
    return {u, d, v};
}

std::vector<BigInt> invariant_factors(const SNFResult& s)
{
    std::vector<BigInt> out;
    for (Eigen::Index i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i) out.push_back(s.D(i, i));
    return out;
}

bool check_snf(const MatZ& a, const SNFResult& s)
{
    if (s.U.rows() != a.rows() || s.V.cols() != a.cols()) return false;
    if (MatZ(s.U * a * s.V) != s.D) return false;
    if (abs(bareiss_determinant(s.U)) != 1 || abs(bareiss_determinant(s.V)) != 1) return false;
    for (Eigen::Index i = 0; i < s.D.rows(); ++i)
        for (Eigen::Index j = 0; j < s.D.cols(); ++j)
            if (i != j && !s.D(i, j).is_zero()) return false;
    auto f = invariant_factors(s);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k].sign() < 0) return false;
        if (k + 1 < f.size()) {
            if (f[k].is_zero() && !f[k + 1].is_zero()) return false;
            if (!f[k].is_zero() && !mod(f[k + 1], f[k]).is_zero()) return false;
        }
    }
    return true;
}

std::vector<Eigen::Index> complex_cohomology(const ChainComplexF2& c)
{
    if (c.dims.empty()) return {};
    if (c.d.size() + 1 != c.dims.size()) throw Error(Errc::NotAComplex, "need one differential between each pair of terms");
    for (std::size_t i = 0; i < c.d.size(); ++i)
        if (c.d[i].rows() != c.dims[i + 1] || c.d[i].cols() != c.dims[i])
            throw Error(Errc::NotAComplex, "differential " + std::to_string(i) + " has the wrong shape");
    for (std::size_t i = 0; i + 1 < c.d.size(); ++i)
        if (!is_zero_f2(multiply_f2(c.d[i + 1], c.d[i])))
            throw Error(Errc::NotAComplex, "d" + std::to_string(i + 1) + " d" + std::to_string(i) + " is nonzero");

    std::vector<Eigen::Index> rank(c.d.size());
    for (std::size_t i = 0; i < c.d.size(); ++i) rank[i] = rank_kernel_f2(c.d[i]).rank;
    std::vector<Eigen::Index> out;
    for (std::size_t i = 0; i < c.dims.size(); ++i) {
        Eigen::Index ker = c.dims[i] - (i < rank.size() ? rank[i] : 0);
        Eigen::Index im = i > 0 ? rank[i - 1] : 0;
        out.push_back(ker - im);
    }
    return out;
}

}  // namespace gw
