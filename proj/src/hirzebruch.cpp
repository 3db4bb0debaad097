#include "gw/hirzebruch.hpp"

#include "gw/error.hpp"

namespace gw {

namespace {

Cone axis_cone(int axis, long bound, int other_axis, bool other_any, long other_bound = 0)
{
    Cone c;
    c.shift(axis) = bound;
    c.shift(other_axis) = other_bound;
    c.any[axis] = false;
    c.any[other_axis] = other_any;
    return c;
}

Exponent chart_exponent(int divisor_axis, long div, int residue_axis, long res)
{
    Exponent e;
    e(divisor_axis) = div;
    e(residue_axis) = res;
    return e;
}

}  // namespace

ChartAtlas atlas(long n)
{
    ChartAtlas a;
    a.n = n < 0 ? -n : n;
    a.from_s1[0] << 1, 0, 0, 1;
    a.from_s1[1] << 1, 0, 0, -1;
    a.from_s1[2] << -1, a.n, 0, -1;
    a.from_s1[3] << -1, a.n, 0, 1;
    a.coords = {{{"x", "y"}, {"x", "ybar"}, {"z", "w"}, {"z", "wbar"}}};
    return a;
}

ExpMatrix inverse(const ExpMatrix& m)
{
    long det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det != 1 && det != -1) throw Error(Errc::NotRepresentable, "transition is not unimodular");
    ExpMatrix inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv * det;
}

Exponent transport(const ChartAtlas& a, const Exponent& e, Chart from, Chart to)
{
    return a.matrix(to) * (inverse(a.matrix(from)) * e);
}

const std::array<DivisorInfo, 4>& divisor_table()
{
    static const std::array<DivisorInfo, 4> table = {{
        {Divisor::X, {{{Chart::S1, 1, 0, FixedPoint::Oxy}, {Chart::S4, 1, 0, FixedPoint::Ozwbar}}}, Chart::S1, "x"},
        {Divisor::Y, {{{Chart::S1, 0, 1, FixedPoint::Oxy}, {Chart::S2, 0, 1, FixedPoint::Oxybar}}}, Chart::S1, "y"},
        {Divisor::Z, {{{Chart::S2, 1, 0, FixedPoint::Oxybar}, {Chart::S3, 1, 0, FixedPoint::Ozw}}}, Chart::S3, "z"},
        {Divisor::W, {{{Chart::S3, 0, 1, FixedPoint::Ozw}, {Chart::S4, 0, 1, FixedPoint::Ozwbar}}}, Chart::S3, "w"},
    }};
    return table;
}

const std::array<FixedPointInfo, 4>& fixed_point_table()
{
    static const std::array<FixedPointInfo, 4> table = {{
        {FixedPoint::Oxy, Chart::S1, {Divisor::X, Divisor::Y}, "<0_xy>"},
        {FixedPoint::Ozwbar, Chart::S4, {Divisor::X, Divisor::W}, "<0_zwbar>"},
        {FixedPoint::Oxybar, Chart::S2, {Divisor::Z, Divisor::Y}, "<0_xybar>"},
        {FixedPoint::Ozw, Chart::S3, {Divisor::Z, Divisor::W}, "<0_zw>"},
    }};
    return table;
}

const DivisorChart& divisor_chart(Divisor d, Chart c)
{
    for (const auto& dc : divisor_table()[static_cast<int>(d)].charts)
        if (dc.chart == c) return dc;
    throw Error(Errc::NotRepresentable, "divisor does not meet this chart");
}

const std::array<Exponent, 4>& generators()
{
    static const std::array<Exponent, 4> g = {exponent(0, 0), exponent(1, 0), exponent(0, 1), exponent(1, 1)};
    return g;
}

const std::array<std::string, 4>& generator_labels()
{
    static const std::array<std::string, 4> l = {"<1>", "<x>", "<y>", "<xy>"};
    return l;
}

const std::array<std::string, 8>& middle_labels()
{
    static const std::array<std::string, 8> l = {"<1_x>", "<x>", "<1_y>", "<y>", "<1_z>", "<z>", "<1_w>", "<w>"};
    return l;
}

const std::array<std::string, 4>& point_labels()
{
    static const std::array<std::string, 4> l = {"<0_xy>", "<0_zwbar>", "<0_xybar>", "<0_zw>"};
    return l;
}

UnaryClass d0_entry(const ChartAtlas& a, int g, Divisor d, Chart c)
{
    const DivisorInfo& info = divisor_table()[static_cast<int>(d)];
    const DivisorChart& dc = divisor_chart(d, c);
    const Exponent e = transport(a, generators()[g], Chart::S1, c);

    const Region everything = Region::everything();
    const Region ring{MonomialModule{Cone::at(0, 0)}, {}};
    MonomialModule m = max_integral_lattice(MonomialModule{Cone::at(0, 0)}, e, ring, everything);
    MonomialModule dual = dual_lattice(m, e, ring, everything);

    const int res = dc.residue_axis;
    Reduction r = isotropic_reduce(localize(m, res), localize(dual, res), e, localize(ring, res), everything);
    if (r.width == 0) return UnaryClass::Zero;
    if (c == info.canonical) return reduced_class(r, e, res);

    // Compare against the canonical basis forms <t^-1> and <t^-1 s> seen from this chart.
    const DivisorChart& can = divisor_chart(d, info.canonical);
    for (int k = 0; k < 2; ++k) {
        Exponent b = transport(a, chart_exponent(can.divisor_axis, -1, can.residue_axis, k), info.canonical, c);
        if ((e(res) - b(res)) % 2 == 0) return k == 0 ? UnaryClass::One : UnaryClass::T;
    }
    throw Error(Errc::NotRepresentable, "no basis form matches");
}

UnaryClass d0_entry_shortcut(const ChartAtlas& a, int g, Divisor d)
{
    const DivisorInfo& info = divisor_table()[static_cast<int>(d)];
    const DivisorChart& dc = divisor_chart(d, info.canonical);
    return residue_unary_class(transport(a, generators()[g], Chart::S1, info.canonical), dc.divisor_axis,
                               dc.residue_axis);
}

Region row_ambient(int divisor_axis, long layer)
{
    const int res = 1 - divisor_axis;
    return {MonomialModule{axis_cone(divisor_axis, layer, res, true)},
            MonomialModule{axis_cone(divisor_axis, layer + 1, res, true)}};
}

MonomialModule row_class_module(int divisor_axis, long layer)
{
    return MonomialModule{axis_cone(divisor_axis, layer, 1 - divisor_axis, true)};
}

Region row_value(int divisor_axis, int residue_axis)
{
    return {MonomialModule{axis_cone(residue_axis, 0, divisor_axis, true)},
            MonomialModule{axis_cone(divisor_axis, 0, residue_axis, true)}};
}

RowLattice d1_lattice(const ChartAtlas& a, Divisor d, int k, FixedPoint p)
{
    const DivisorInfo& info = divisor_table()[static_cast<int>(d)];
    const Chart chart = fixed_point_table()[static_cast<int>(p)].chart;
    const DivisorChart& dc = divisor_chart(d, chart);
    const DivisorChart& can = divisor_chart(d, info.canonical);

    RowLattice out;
    out.divisor_axis = dc.divisor_axis;
    out.residue_axis = dc.residue_axis;
    out.e = transport(a, chart_exponent(can.divisor_axis, 1, can.residue_axis, k), info.canonical, chart);
    out.ambient = row_ambient(dc.divisor_axis);
    out.value = row_value(dc.divisor_axis, dc.residue_axis);
    out.integral = max_integral_lattice(row_class_module(dc.divisor_axis), out.e, out.value, out.ambient);
    out.dual = dual_lattice(out.integral, out.e, out.value, out.ambient);
    return out;
}

int d1_entry(const ChartAtlas& a, Divisor d, int k, FixedPoint p)
{
    RowLattice l = d1_lattice(a, d, k, p);
    QuotientDim q = quotient_dim(l.integral, l.dual, l.ambient);
    if (q.infinite) throw Error(Errc::NotRepresentable, "infinite quotient at a fixed point");
    return static_cast<int>(q.value % 2);
}

MatF2 build_d0(long n)
{
    const ChartAtlas a = atlas(n);
    MatF2 d0 = MatF2::Zero(8, 4);
    for (int g = 0; g < 4; ++g)
        for (const auto& info : divisor_table()) {
            UnaryClass c = d0_entry(a, g, info.divisor, info.canonical);
            if (c == UnaryClass::One) d0(basis_index(info.divisor, 0), g) = 1;
            if (c == UnaryClass::T) d0(basis_index(info.divisor, 1), g) = 1;
        }
    return d0;
}

MatF2 build_d1(long n)
{
    const ChartAtlas a = atlas(n);
    MatF2 d1 = MatF2::Zero(4, 8);
    for (const auto& info : divisor_table())
        for (int k = 0; k < 2; ++k)
            for (const auto& dc : info.charts)
                d1(static_cast<int>(dc.point), basis_index(info.divisor, k)) =
                    static_cast<std::uint8_t>(d1_entry(a, info.divisor, k, dc.point));
    return d1;
}

GWComplex build_complex(long n)
{
    GWComplex c;
    c.n = n < 0 ? -n : n;
    c.d0 = build_d0(c.n);
    c.d1 = build_d1(c.n);
    return c;
}

Cohomology cohomology(const GWComplex& c)
{
    if (!is_zero_f2(multiply_f2(c.d1, c.d0))) throw Error(Errc::ComplexInvalid, "d1 d0 is nonzero");
    RankKernel r0 = rank_kernel_f2(c.d0);
    RankKernel r1 = rank_kernel_f2(c.d1);
    Cohomology h;
    h.ker_d0 = r0.kernel_dim;
    h.im_d0 = r0.rank;
    h.ker_d1 = r1.kernel_dim;
    h.im_d1 = r1.rank;
    h.h0 = h.ker_d0;
    h.h1 = h.ker_d1 - h.im_d0;
    h.h2 = c.d1.rows() - h.im_d1;
    return h;
}

Cohomology cohomology(long n) { return cohomology(build_complex(n)); }

}  // namespace gw
