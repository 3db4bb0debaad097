#pragma once

#include <Eigen/Core>
#include <array>
#include <limits>
#include <utility>
#include <vector>

namespace gw {

using Exponent = Eigen::Matrix<long, 2, 1>;

inline Exponent exponent(long i, long j)
{
    Exponent e;
    e << i, j;
    return e;
}

// Lower bound standing for an axis marked Any.
constexpr long kNegInf = std::numeric_limits<long>::min();

struct Cone {
    Exponent shift = Exponent::Zero();
    std::array<bool, 2> any{false, false};

    static Cone at(long i, long j) { return {exponent(i, j), {false, false}}; }
    static Cone at(const Exponent& e) { return {e, {false, false}}; }
    static Cone with_any(long i, long j, bool any_i, bool any_j) { return {exponent(i, j), {any_i, any_j}}; }
    static Cone everything() { return {Exponent::Zero(), {true, true}}; }

    long lo(int axis) const { return any[axis] ? kNegInf : shift(axis); }
    bool contains(const Exponent& u) const;

    friend bool operator==(const Cone& a, const Cone& b) { return a.lo(0) == b.lo(0) && a.lo(1) == b.lo(1); }
};

struct MonomialModule {
    std::vector<Cone> cones;

    MonomialModule() = default;
    MonomialModule(std::initializer_list<Cone> cs) : cones(cs) {}
    explicit MonomialModule(std::vector<Cone> cs) : cones(std::move(cs)) {}

    bool empty() const { return cones.empty(); }
    bool contains(const Exponent& u) const;
};

// The quotient plus / minus. Nonzero elements are in plus and not in minus.
struct Region {
    MonomialModule plus;
    MonomialModule minus;

    static Region everything() { return {MonomialModule{Cone::everything()}, {}}; }

    bool nonzero(const Exponent& u) const { return plus.contains(u) && !minus.contains(u); }
    bool allowed(const Exponent& u) const { return plus.contains(u) || minus.contains(u); }
};

struct QuotientDim {
    bool infinite = false;
    long value = 0;

    static QuotientDim finite(long v) { return {false, v}; }
    static QuotientDim unbounded() { return {true, 0}; }

    friend bool operator==(const QuotientDim&, const QuotientDim&) = default;
};

enum class UnaryClass { Zero, One, T };

// Module algebra. Results are normalized: empty and redundant cones removed.
MonomialModule simplify(const MonomialModule& m);
MonomialModule unite(const MonomialModule& a, const MonomialModule& b);
MonomialModule intersect(const MonomialModule& a, const MonomialModule& b);
MonomialModule shift(const MonomialModule& m, const Exponent& by);
MonomialModule localize(const MonomialModule& m, int axis);
Region localize(const Region& r, int axis);

bool subset(const MonomialModule& a, const MonomialModule& b);
// a and b compared as submodules of the ambient quotient
bool subset(const MonomialModule& a, const MonomialModule& b, const Region& ambient);
bool same(const MonomialModule& a, const MonomialModule& b, const Region& ambient);

// axes along which the nonzero part of the ambient is unbounded below
std::vector<int> free_axes(const Region& ambient);

MonomialModule dual_lattice(const MonomialModule& m, const Exponent& e, const Region& v, const Region& ambient);

QuotientDim quotient_dim(const MonomialModule& inner, const MonomialModule& outer,
                         const Region& ambient = Region::everything());

bool is_integral(const MonomialModule& m, const Exponent& e, const Region& v);

MonomialModule max_integral_lattice(const MonomialModule& classmod, const Exponent& e, const Region& v,
                                    const Region& ambient);

long ell(const MonomialModule& m, int axis, const Region& ambient);
long ell(const MonomialModule& inner, const MonomialModule& outer, int axis, const Region& ambient);

struct Reduction {
    MonomialModule inner;
    MonomialModule outer;
    int axis = -1;  // multiplication axis, -1 when the quotient is empty
    long width = 0;
    int steps = 0;
};

// smallest w with t^w * outer inside inner along the axis, or -1
long quotient_width(const MonomialModule& inner, const MonomialModule& outer, int axis, const Region& ambient);

Reduction isotropic_reduce(const MonomialModule& inner, const MonomialModule& outer, const Exponent& e,
                           const Region& v, const Region& ambient);

UnaryClass residue_unary_class(const Exponent& e, int divisor_axis, int residue_axis);

// Class of a width 0 or 1 reduction; the residue is read from e on the residue axis.
UnaryClass reduced_class(const Reduction& r, const Exponent& e, int residue_axis);

const char* unary_class_name(UnaryClass c);

}  // namespace gw
