#include "gw/io.hpp"

#include "gw/error.hpp"

namespace gw {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    bad("expected an integer or an \"a/b\" string");
}

json to_json(const Rational& r)
{
    if (r.is_integer() && r.num().fits_long()) return r.num().to_long();
    return r.str();
}

BigInt integer_from_json(const json& j)
{
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    bad("expected an integer");
}

json to_json(const BigInt& b)
{
    if (b.fits_long()) return b.to_long();
    return b.str();
}

DiagonalForm FormInput::diagonal() const
{
    if (diag) return *diag;
    return diagonalize(*gram).d;
}

FormInput form_from_json(const json& j)
{
    if (!j.is_object()) bad("form must be an object");
    FormInput in;
    if (j.contains("field")) {
        const json& f = j.at("field");
        if (f.is_string() && f.get<std::string>() == "Q")
            in.field = FieldTag::rationals();
        else if (f.is_object() && f.contains("Fp") && f.at("Fp").is_number_integer())
            in.field = FieldTag::prime(f.at("Fp").get<long>());
        else
            bad("field must be \"Q\" or {\"Fp\": p}");
    }
    if (j.contains("gram")) {
        const json& g = j.at("gram");
        if (!g.is_array()) bad("gram must be an array of rows");
        auto n = static_cast<Eigen::Index>(g.size());
        MatQ m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!g[i].is_array() || static_cast<Eigen::Index>(g[i].size()) != n) bad("gram must be square");
            for (Eigen::Index k = 0; k < n; ++k) m(i, k) = rational_from_json(g[i][k]);
        }
        in.gram = make_gram(in.field, m);
    } else if (j.contains("diag")) {
        const json& d = j.at("diag");
        if (!d.is_array()) bad("diag must be an array");
        DiagonalForm df{in.field, {}};
        for (const auto& e : d) df.entries.push_back(in.field.normalize(rational_from_json(e)));
        in.diag = df;
    } else {
        bad("form needs \"gram\" or \"diag\"");
    }
    return in;
}

namespace {

json field_json(const FieldTag& f)
{
    if (f.is_q()) return "Q";
    return json{{"Fp", f.p}};
}

}  // namespace

json to_json(const GramForm& g)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.dim(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < g.dim(); ++k) row.push_back(to_json(g.gram(i, k)));
        rows.push_back(row);
    }
    return {{"field", field_json(g.field)}, {"gram", rows}};
}

json to_json(const DiagonalForm& d)
{
    json entries = json::array();
    for (const auto& e : d.entries) entries.push_back(to_json(e));
    return {{"field", field_json(d.field)}, {"diag", entries}};
}

json to_json(const WittFp& c)
{
    if (c.kind() == FpStructure::KleinFour) return {{"p", c.p}, {"kind", "klein"}, {"value", {c.a, c.b}}};
    return {{"p", c.p}, {"kind", "cyclic"}, {"value", c.a}};
}

json to_json(const WittQ& c)
{
    json res = json::object();
    for (const auto& [p, fp] : c.residues) res[std::to_string(p)] = to_json(fp);
    return {{"signature", to_json(c.signature)}, {"dyadic", c.dyadic}, {"residues", res}};
}

WittFp witt_fp_from_json(const json& j, long p)
{
    WittFp c = WittFp::zero(p);
    const json& v = j.is_object() ? field(j, "value") : j;
    if (c.kind() == FpStructure::KleinFour) {
        if (!v.is_array() || v.size() != 2) bad("klein class value must be [r, d]");
        c.a = v[0].get<int>() & 1;
        c.b = v[1].get<int>() & 1;
    } else {
        if (!v.is_number_integer()) bad("cyclic class value must be an integer");
        c.a = ((v.get<int>() % 4) + 4) % 4;
    }
    return c;
}

WittQ witt_q_from_json(const json& j)
{
    WittQ c;
    c.signature = j.contains("signature") ? integer_from_json(j.at("signature")) : BigInt(0);
    c.dyadic = j.contains("dyadic") ? (j.at("dyadic").get<int>() & 1) : 0;
    if (j.contains("residues")) {
        const json& r = j.at("residues");
        if (!r.is_object()) bad("residues must be an object keyed by prime");
        for (auto it = r.begin(); it != r.end(); ++it) {
            long p = 0;
            try {
                p = std::stol(it.key());
            } catch (const std::exception&) {
                bad("residue key '" + it.key() + "' is not an integer");
            }
            WittFp fp = witt_fp_from_json(it.value(), p);
            if (!fp.is_zero()) c.residues[p] = fp;
        }
    }
    return c;
}

json to_json(const MatZ& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const MatF2& m) { return to_json(lift(m)); }

MatZ matz_from_json(const json& j)
{
    const json& e = j.is_array() ? j : field(j, "entries");
    if (!e.is_array()) bad("entries must be an array of rows");
    auto rows = static_cast<Eigen::Index>(e.size());
    Eigen::Index cols = rows > 0 && e[0].is_array() ? static_cast<Eigen::Index>(e[0].size()) : 0;
    if (j.is_object() && j.contains("rows") && j.at("rows").get<Eigen::Index>() != rows) bad("rows does not match entries");
    if (j.is_object() && j.contains("cols")) {
        auto c = j.at("cols").get<Eigen::Index>();
        if (rows > 0 && c != cols) bad("cols does not match entries");
        cols = c;
    }
    MatZ m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (!e[i].is_array() || static_cast<Eigen::Index>(e[i].size()) != cols) bad("ragged matrix");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = integer_from_json(e[i][k]);
    }
    return m;
}

MatF2 matf2_from_json(const json& j) { return reduce_f2(matz_from_json(j)); }

json to_json(const SNFResult& s)
{
    json diag = json::array();
    for (const auto& f : invariant_factors(s)) diag.push_back(to_json(f));
    return {{"U", to_json(s.U)}, {"D", to_json(s.D)}, {"V", to_json(s.V)}, {"invariant_factors", diag}};
}

ChainComplexF2 complex_from_json(const json& j)
{
    ChainComplexF2 c;
    for (const auto& d : field(j, "dims")) c.dims.push_back(d.get<Eigen::Index>());
    for (const auto& m : field(j, "differentials")) c.d.push_back(matf2_from_json(m));
    return c;
}

namespace {

json bit_rows(const MatF2& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(static_cast<int>(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json to_json(const GWComplex& c, const Cohomology& h)
{
    json labels = {{"generators", generator_labels()}, {"middle", middle_labels()}, {"points", point_labels()}};
    return {{"n", c.n},
            {"d0", bit_rows(c.d0)},
            {"d1", bit_rows(c.d1)},
            {"labels", labels},
            {"cohomology", {h.h0, h.h1, h.h2}},
            {"dims", {{"ker_d0", h.ker_d0}, {"im_d0", h.im_d0}, {"ker_d1", h.ker_d1}, {"im_d1", h.im_d1}}}};
}

}  // namespace gw
