#pragma once

#include "gw/homology.hpp"
#include "gw/lattice.hpp"

#include <array>
#include <string>

namespace gw {

// Charts in the order sigma_1 .. sigma_4 with coordinates (x,y), (x,1/y), (z,w), (z,1/w).
enum class Chart { S1 = 0, S2 = 1, S3 = 2, S4 = 3 };
enum class Divisor { X = 0, Y = 1, Z = 2, W = 3 };
// Row order of d1.
enum class FixedPoint { Oxy = 0, Ozwbar = 1, Oxybar = 2, Ozw = 3 };

using ExpMatrix = Eigen::Matrix<long, 2, 2>;

struct ChartAtlas {
    long n = 0;
    std::array<ExpMatrix, 4> from_s1;  // sigma_1 exponents to chart exponents
    std::array<std::array<std::string, 2>, 4> coords;

    const ExpMatrix& matrix(Chart c) const { return from_s1[static_cast<int>(c)]; }
};

ChartAtlas atlas(long n);

ExpMatrix inverse(const ExpMatrix& m);
Exponent transport(const ChartAtlas& a, const Exponent& e, Chart from, Chart to);

struct DivisorChart {
    Chart chart;
    int divisor_axis;
    int residue_axis;
    FixedPoint point;
};

struct DivisorInfo {
    Divisor divisor;
    std::array<DivisorChart, 2> charts;
    Chart canonical;
    std::string label;
};

struct FixedPointInfo {
    FixedPoint point;
    Chart chart;
    std::array<Divisor, 2> divisors;
    std::string label;
};

const std::array<DivisorInfo, 4>& divisor_table();
const std::array<FixedPointInfo, 4>& fixed_point_table();
const DivisorChart& divisor_chart(Divisor d, Chart c);

// Generators <1>, <x>, <y>, <xy> as sigma_1 exponents.
const std::array<Exponent, 4>& generators();
const std::array<std::string, 4>& generator_labels();
const std::array<std::string, 8>& middle_labels();
const std::array<std::string, 4>& point_labels();

inline int basis_index(Divisor d, int k) { return 2 * static_cast<int>(d) + k; }

// d0 entry of generator g at divisor d, computed in chart c with the lattice pipeline.
UnaryClass d0_entry(const ChartAtlas& a, int g, Divisor d, Chart c);
UnaryClass d0_entry_shortcut(const ChartAtlas& a, int g, Divisor d);

struct RowLattice {
    Exponent e;
    MonomialModule integral;
    MonomialModule dual;
    Region value;
    Region ambient;
    int divisor_axis;
    int residue_axis;
};

// Canonical representative of basis <s^k> of divisor d, moved to the chart of fixed point p.
RowLattice d1_lattice(const ChartAtlas& a, Divisor d, int k, FixedPoint p);
int d1_entry(const ChartAtlas& a, Divisor d, int k, FixedPoint p);

// Single layer t^layer R[1/s] / t^(layer+1) R[1/s] and the value group R[1/t] / R[1/s].
Region row_ambient(int divisor_axis, long layer = -1);
MonomialModule row_class_module(int divisor_axis, long layer = -1);
Region row_value(int divisor_axis, int residue_axis);

MatF2 build_d0(long n);
MatF2 build_d1(long n);

struct GWComplex {
    long n = 0;
    MatF2 d0;
    MatF2 d1;
};

GWComplex build_complex(long n);

struct Cohomology {
    Eigen::Index h0 = 0, h1 = 0, h2 = 0;
    Eigen::Index ker_d0 = 0, im_d0 = 0, ker_d1 = 0, im_d1 = 0;
};

Cohomology cohomology(long n);
Cohomology cohomology(const GWComplex& c);

}  // namespace gw
