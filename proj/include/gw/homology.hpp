#pragma once

#include "gw/number.hpp"

#include <cstdint>
#include <vector>

namespace gw {

using MatF2 = Mat<std::uint8_t>;

struct RankKernel {
    Eigen::Index rank = 0;
    Eigen::Index kernel_dim = 0;
};

RankKernel rank_kernel_f2(const MatF2& m);
MatF2 multiply_f2(const MatF2& a, const MatF2& b);
bool is_zero_f2(const MatF2& m);
MatZ lift(const MatF2& m);
MatF2 reduce_f2(const MatZ& m);

// Fraction-free elimination; exact for any integral domain scalar.
template <typename Scalar>
Scalar bareiss_determinant(Mat<Scalar> a)
{
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar sign(1), prev(1);
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index r = k + 1;
            while (r < n && a(r, k) == Scalar(0)) ++r;
            if (r == n) return Scalar(0);
            a.row(k).swap(a.row(r));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

struct SNFResult {
    MatZ U;
    MatZ D;
    MatZ V;
};

SNFResult smith_normal_form(const MatZ& a);
std::vector<BigInt> invariant_factors(const SNFResult& s);
// D = U A V, U and V unimodular, D diagonal, nonnegative, dividing chain
bool check_snf(const MatZ& a, const SNFResult& s);

struct ChainComplexF2 {
    std::vector<Eigen::Index> dims;
    std::vector<MatF2> d;  // d[i] : F2^dims[i] -> F2^dims[i+1], a dims[i+1] x dims[i] matrix
};

std::vector<Eigen::Index> complex_cohomology(const ChainComplexF2& c);

}  // namespace gw
