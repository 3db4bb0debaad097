#include "gw/lattice.hpp"

#include "gw/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace gw {

namespace {

bool leq(long a, long b) { return a == kNegInf || (b != kNegInf && a <= b); }

long add_bound(long a, long b) { return (a == kNegInf || b == kNegInf) ? kNegInf : a + b; }

long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
long ceil_half(long x) { return -floor_half(-x); }

Cone make_cone(long lo0, long lo1)
{
    Cone c;
    c.any = {lo0 == kNegInf, lo1 == kNegInf};
    c.shift << (c.any[0] ? 0 : lo0), (c.any[1] ? 0 : lo1);
    return c;
}

// c inside d
bool cone_in_cone(const Cone& c, const Cone& d) { return leq(d.lo(0), c.lo(0)) && leq(d.lo(1), c.lo(1)); }

bool cone_in(const Cone& c, const MonomialModule& m)
{
    return std::any_of(m.cones.begin(), m.cones.end(), [&](const Cone& d) { return cone_in_cone(c, d); });
}

struct Cell {
    long lo;
    long hi;
    bool bounded;
    long rep() const { return lo; }
    long size() const { return hi - lo + 1; }
};

void collect(const MonomialModule& m, std::array<std::vector<long>, 2>& t)
{
    for (const auto& c : m.cones)
        for (int a = 0; a < 2; ++a)
            if (c.lo(a) != kNegInf) t[a].push_back(c.lo(a));
}

std::vector<Cell> cells(std::vector<long> t)
{
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.empty()) return {{0, 0, false}};
    std::vector<Cell> out;
    out.push_back({t.front() - 1, t.front() - 1, false});
    for (std::size_t k = 0; k + 1 < t.size(); ++k) out.push_back({t[k], t[k + 1] - 1, true});
    out.push_back({t.back(), t.back(), false});
    return out;
}

struct Grid {
    std::array<std::vector<Cell>, 2> axis;

    explicit Grid(std::initializer_list<const MonomialModule*> ms)
    {
        std::array<std::vector<long>, 2> t;
        for (auto* m : ms) collect(*m, t);
        axis[0] = cells(t[0]);
        axis[1] = cells(t[1]);
    }

    Exponent point(std::size_t c0, std::size_t c1) const { return exponent(axis[0][c0].rep(), axis[1][c1].rep()); }
};

MonomialModule region_set(const Region& r) { return unite(r.plus, r.minus); }

long axis_limit(std::initializer_list<const MonomialModule*> ms, int axis)
{
    long lo = 0, hi = 0;
    bool seen = false;
    for (auto* m : ms)
        for (const auto& c : m->cones) {
            long v = c.lo(axis);
            if (v == kNegInf) continue;
            lo = seen ? std::min(lo, v) : v;
            hi = seen ? std::max(hi, v) : v;
            seen = true;
        }
    return hi - lo + 2;
}

}  // namespace

bool Cone::contains(const Exponent& u) const { return leq(lo(0), u(0)) && leq(lo(1), u(1)); }

bool MonomialModule::contains(const Exponent& u) const
{
    return std::any_of(cones.begin(), cones.end(), [&](const Cone& c) { return c.contains(u); });
}

MonomialModule simplify(const MonomialModule& m)
{
    std::vector<Cone> out;
    for (std::size_t i = 0; i < m.cones.size(); ++i) {
        const Cone& c = m.cones[i];
        bool redundant = false;
        for (std::size_t j = 0; j < m.cones.size() && !redundant; ++j) {
            if (i == j || !cone_in_cone(c, m.cones[j])) continue;
            // equal cones: keep the first
            redundant = !(m.cones[j] == c) || j < i;
        }
        if (!redundant) out.push_back(make_cone(c.lo(0), c.lo(1)));
    }
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
        return std::make_pair(a.lo(1), a.lo(0)) < std::make_pair(b.lo(1), b.lo(0));
    });
    return MonomialModule(out);
}

MonomialModule unite(const MonomialModule& a, const MonomialModule& b)
{
    MonomialModule out = a;
    out.cones.insert(out.cones.end(), b.cones.begin(), b.cones.end());
    return simplify(out);
}

MonomialModule intersect(const MonomialModule& a, const MonomialModule& b)
{
    MonomialModule out;
    for (const auto& c : a.cones)
        for (const auto& d : b.cones) out.cones.push_back(make_cone(std::max(c.lo(0), d.lo(0)), std::max(c.lo(1), d.lo(1))));
    return simplify(out);
}

MonomialModule shift(const MonomialModule& m, const Exponent& by)
{
    MonomialModule out = m;
    for (auto& c : out.cones) c.shift += by;
    return out;
}

MonomialModule localize(const MonomialModule& m, int axis)
{
    MonomialModule out = m;
    for (auto& c : out.cones) c.any[axis] = true;
    return simplify(out);
}

Region localize(const Region& r, int axis) { return {localize(r.plus, axis), localize(r.minus, axis)}; }

bool subset(const MonomialModule& a, const MonomialModule& b)
{
    return std::all_of(a.cones.begin(), a.cones.end(), [&](const Cone& c) { return cone_in(c, b); });
}

bool subset(const MonomialModule& a, const MonomialModule& b, const Region& ambient)
{
    return subset(intersect(a, ambient.plus), unite(b, ambient.minus));
}

bool same(const MonomialModule& a, const MonomialModule& b, const Region& ambient)
{
    return subset(a, b, ambient) && subset(b, a, ambient);
}

std::vector<int> free_axes(const Region& ambient)
{
    Grid g{&ambient.plus, &ambient.minus};
    std::vector<int> out;
    for (int a = 0; a < 2; ++a) {
        const auto& other = g.axis[1 - a];
        bool found = false;
        for (std::size_t k = 0; k < other.size() && !found; ++k) {
            Exponent u;
            u(a) = g.axis[a].front().rep();
            u(1 - a) = other[k].rep();
            found = ambient.nonzero(u);
        }
        if (found) out.push_back(a);
    }
    return out;
}

MonomialModule dual_lattice(const MonomialModule& m, const Exponent& e, const Region& v, const Region& ambient)
{
    if (m.empty()) throw Error(Errc::NotRepresentable, "dual of the empty module");
    MonomialModule allowed = region_set(v);
    MonomialModule acc = ambient.plus;
    for (const auto& c : m.cones) {
        MonomialModule ok;
        for (const auto& a : allowed.cones) {
            std::array<long, 2> lo{};
            bool empty = false;
            for (int ax = 0; ax < 2; ++ax) {
                if (c.lo(ax) == kNegInf) {
                    // a receding module needs a receding target
                    if (a.lo(ax) != kNegInf) empty = true;
                    lo[ax] = kNegInf;
                } else {
                    lo[ax] = a.lo(ax) == kNegInf ? kNegInf : a.lo(ax) - e(ax) - c.lo(ax);
                }
            }
            if (!empty) ok.cones.push_back(make_cone(lo[0], lo[1]));
        }
        acc = intersect(acc, ok);
    }
    return acc;
}

QuotientDim quotient_dim(const MonomialModule& inner, const MonomialModule& outer, const Region& ambient)
{
    if (!subset(inner, outer, ambient)) throw Error(Errc::NotNested, "inner module is not contained in outer");
    Grid g{&inner, &outer, &ambient.plus, &ambient.minus};
    long total = 0;
    for (std::size_t i = 0; i < g.axis[0].size(); ++i)
        for (std::size_t j = 0; j < g.axis[1].size(); ++j) {
            Exponent u = g.point(i, j);
            if (!outer.contains(u) || inner.contains(u) || !ambient.nonzero(u)) continue;
            if (!g.axis[0][i].bounded || !g.axis[1][j].bounded) return QuotientDim::unbounded();
            total += g.axis[0][i].size() * g.axis[1][j].size();
        }
    return QuotientDim::finite(total);
}

bool is_integral(const MonomialModule& m, const Exponent& e, const Region& v)
{
    MonomialModule allowed = region_set(v);
    for (const auto& c : m.cones)
        for (const auto& d : m.cones) {
            Cone s = make_cone(add_bound(add_bound(c.lo(0), d.lo(0)), e(0)),
                               add_bound(add_bound(c.lo(1), d.lo(1)), e(1)));
            if (!cone_in(s, allowed)) return false;
        }
    return true;
}

MonomialModule max_integral_lattice(const MonomialModule& classmod, const Exponent& e, const Region& v,
                                    const Region& ambient)
{
    if (classmod.cones.size() != 1) throw Error(Errc::NotRepresentable, "class module must be a single cone");
    const Cone& base = classmod.cones.front();
    auto free = free_axes(ambient);
    auto is_free = [&](int a) { return std::find(free.begin(), free.end(), a) != free.end(); };

    std::vector<Cone> candidates;
    for (const auto& a : region_set(v).cones) {
        std::array<long, 2> lo{};
        bool feasible = true;
        for (int ax = 0; ax < 2; ++ax) {
            if (is_free(ax)) {
                lo[ax] = a.lo(ax) == kNegInf ? kNegInf : ceil_half(a.lo(ax) - e(ax));
            } else {
                lo[ax] = base.lo(ax);
                feasible = feasible && leq(a.lo(ax), add_bound(add_bound(lo[ax], lo[ax]), e(ax)));
            }
        }
        if (feasible) candidates.push_back(make_cone(lo[0], lo[1]));
    }
    if (candidates.empty()) throw Error(Errc::NoIntegralLattice, "no shift satisfies the integrality bound");
    MonomialModule cands = simplify(MonomialModule(candidates));
    if (cands.cones.size() != 1) throw Error(Errc::NotRepresentable, "integral lattice is not a single cone");
    return cands;
}

namespace {

long count_layers(const std::function<bool(const Exponent&)>& in, const Grid& g, int axis)
{
    const auto& layers = g.axis[axis];
    const auto& across = g.axis[1 - axis];
    long total = 0;
    for (const auto& layer : layers) {
        std::vector<bool> hit;
        for (const auto& c : across) {
            Exponent u;
            u(axis) = layer.rep();
            u(1 - axis) = c.rep();
            hit.push_back(in(u));
        }
        auto first = std::find(hit.begin(), hit.end(), true);
        if (first == hit.end()) continue;
        if (!layer.bounded) throw Error(Errc::NotTorsionFree, "infinitely many layers");
        if (!std::all_of(first, hit.end(), [](bool b) { return b; }))
            throw Error(Errc::NotTorsionFree, "layer cross-section is not free");
        total += layer.size();
    }
    return total;
}

}  // namespace

long ell(const MonomialModule& m, int axis, const Region& ambient)
{
    Grid g{&m, &ambient.plus, &ambient.minus};
    return count_layers([&](const Exponent& u) { return m.contains(u) && ambient.nonzero(u); }, g, axis);
}

long ell(const MonomialModule& inner, const MonomialModule& outer, int axis, const Region& ambient)
{
    if (!subset(inner, outer, ambient)) throw Error(Errc::NotNested, "inner module is not contained in outer");
    Grid g{&inner, &outer, &ambient.plus, &ambient.minus};
    return count_layers(
        [&](const Exponent& u) { return outer.contains(u) && !inner.contains(u) && ambient.nonzero(u); }, g, axis);
}

long quotient_width(const MonomialModule& inner, const MonomialModule& outer, int axis, const Region& ambient)
{
    long limit = axis_limit({&inner, &outer, &ambient.plus, &ambient.minus}, axis);
    Exponent unit = Exponent::Zero();
    unit(axis) = 1;
    for (long w = 0; w <= limit; ++w)
        if (subset(shift(outer, unit * w), inner, ambient)) return w;
    return -1;
}

Reduction isotropic_reduce(const MonomialModule& inner, const MonomialModule& outer, const Exponent& e,
                           const Region& v, const Region& ambient)
{
    if (!subset(inner, outer, ambient)) throw Error(Errc::NotNested, "inner module is not contained in outer");
    Reduction r{simplify(inner), simplify(outer), -1, 0, 0};
    if (subset(outer, inner, ambient)) return r;

    for (int a : free_axes(ambient)) {
        long w = quotient_width(r.inner, r.outer, a, ambient);
        if (w >= 0) {
            r.axis = a;
            r.width = w;
            break;
        }
    }
    if (r.axis < 0) throw Error(Errc::NotRepresentable, "quotient has no finite width along a free axis");

    Exponent unit = Exponent::Zero();
    unit(r.axis) = 1;
    while (r.width >= 2) {
        MonomialModule s = unite(r.inner, shift(r.outer, unit * (r.width - 1)));
        MonomialModule perp = intersect(dual_lattice(s, e, v, ambient), r.outer);
        if (!subset(s, perp, ambient)) throw Error(Errc::NotRepresentable, "submodule is not totally isotropic");
        long w = quotient_width(s, perp, r.axis, ambient);
        if (w < 0 || w > r.width - 2) throw Error(Errc::NotRepresentable, "reduction did not shrink the quotient");
        r.inner = s;
        r.outer = perp;
        r.width = w;
        ++r.steps;
    }
    return r;
}

UnaryClass residue_unary_class(const Exponent& e, int divisor_axis, int residue_axis)
{
    if (divisor_axis == residue_axis) throw Error(Errc::NotRepresentable, "axes must differ");
    if (e(divisor_axis) % 2 == 0) return UnaryClass::Zero;
    return e(residue_axis) % 2 == 0 ? UnaryClass::One : UnaryClass::T;
}

UnaryClass reduced_class(const Reduction& r, const Exponent& e, int residue_axis)
{
    if (r.width == 0) return UnaryClass::Zero;
    if (r.width != 1) throw Error(Errc::NotRepresentable, "reduction has width " + std::to_string(r.width));
    return e(residue_axis) % 2 == 0 ? UnaryClass::One : UnaryClass::T;
}

const char* unary_class_name(UnaryClass c)
{
    switch (c) {
    case UnaryClass::Zero: return "0";
    case UnaryClass::One: return "1";
    case UnaryClass::T: return "t";
    }
    return "?";
}

}  // namespace gw
