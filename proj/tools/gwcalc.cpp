#include "gw/error.hpp"
#include "gw/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gw;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

json read_json(const std::string& path)
{
    std::stringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(Errc::ParseError, "cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::string fp_text(const WittFp& c)
{
    std::ostringstream os;
    if (c.kind() == FpStructure::KleinFour)
        os << "(" << c.a << "," << c.b << ") in W(F_" << c.p << ") = (Z/2)^2";
    else
        os << c.a << " in W(F_" << c.p << ") = Z/4";
    return os.str();
}

void print_bits(std::ostream& os, const MatF2& m, const std::array<std::string, 4>& rows4,
                const std::array<std::string, 8>& rows8, bool rows_are_middle,
                const std::vector<std::string>& cols)
{
    os << std::setw(10) << "";
    for (const auto& c : cols) os << std::setw(10) << c;
    os << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << std::setw(10) << (rows_are_middle ? rows8[i] : rows4[i]);
        for (Eigen::Index k = 0; k < m.cols(); ++k) os << std::setw(10) << static_cast<int>(m(i, k));
        os << "\n";
    }
}

std::string factors_text(const MatF2& m)
{
    std::ostringstream os;
    auto f = invariant_factors(smith_normal_form(lift(m)));
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
    return os.str();
}

int cmd_hirzebruch(long n, bool as_json)
{
    GWComplex c = build_complex(n);
    Cohomology h = cohomology(c);
    if (as_json) {
        json out = to_json(c, h);
        out["snf"] = {{"d0", to_json(smith_normal_form(lift(c.d0)))}, {"d1", to_json(smith_normal_form(lift(c.d1)))}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    const auto& g = generator_labels();
    const auto& mid = middle_labels();
    std::cout << "H_" << c.n << "\n\nd0\n";
    print_bits(std::cout, c.d0, point_labels(), mid, true, {g.begin(), g.end()});
    std::cout << "\nd1\n";
    print_bits(std::cout, c.d1, point_labels(), mid, false, {mid.begin(), mid.end()});
    std::cout << "\nSNF d0: " << factors_text(c.d0) << "\n";
    std::cout << "SNF d1: " << factors_text(c.d1) << "\n\n";
    std::cout << "dim ker d0 = " << h.ker_d0 << "\n";
    std::cout << "dim im d0 = " << h.im_d0 << "\n";
    std::cout << "dim ker d1 = " << h.ker_d1 << "\n";
    std::cout << "dim im d1 = " << h.im_d1 << "\n";
    std::cout << "H^0 = " << h.h0 << "\n";
    std::cout << "H^1 = " << h.h1 << "\n";
    std::cout << "H^2 = " << h.h2 << "\n";
    return 0;
}

void print_witt_q(const WittQ& c, bool as_json)
{
    if (as_json) {
        std::cout << to_json(c).dump() << "\n";
        return;
    }
    std::cout << "signature = " << c.signature << "\n";
    std::cout << "dyadic = " << c.dyadic << "\n";
    for (const auto& [p, fp] : c.residues) std::cout << "residue " << p << " = " << fp_text(fp) << "\n";
}

DiagonalForm rational_form(const std::string& path)
{
    FormInput in = form_from_json(read_json(path));
    if (!in.field.is_q()) throw Error(Errc::ParseError, "form must be over Q");
    if (in.gram && static_cast<Eigen::Index>(in.diagonal().rank()) < in.gram->dim())
        throw Error(Errc::SingularForm, "form is singular");
    DiagonalForm d = in.diagonal();
    for (const auto& e : d.entries)
        if (e.is_zero()) throw Error(Errc::ZeroEntry, "diagonal entry is zero");
    return d;
}

int run(int argc, char** argv)
{
    CLI::App app{"Witt group invariants and the toric Gersten-Witt complex of Hirzebruch surfaces"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    long n = 0;
    auto* hirz = app.add_subcommand("hirzebruch", "boundary matrices and cohomology of H_n");
    hirz->add_option("--n", n, "twist of the surface")->required();

    std::string form_path;
    auto* classify = app.add_subcommand("classify-q", "W(Q) invariants of a form");
    classify->add_option("file", form_path, "form JSON (default stdin)");

    long p = 0;
    auto* fps = app.add_subcommand("fp-structure", "group structure of W(F_p)");
    fps->add_option("--p", p, "odd prime")->required();

    int index = 2;
    auto* res = app.add_subcommand("residue", "first or second residue of a form over Q");
    res->add_option("--p", p, "odd prime")->required();
    res->add_option("--i", index, "1 or 2")->check(CLI::IsMember({1, 2}));
    res->add_option("file", form_path, "form JSON (default stdin)");

    std::string matrix_path;
    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("file", matrix_path, "matrix JSON (default stdin)");

    auto* cplx = app.add_subcommand("complex-cohomology", "F2 cohomology of a finite complex");
    cplx->add_option("file", matrix_path, "complex JSON (default stdin)");

    std::string spec;
    auto* lift_cmd = app.add_subcommand("lift", "diagonal form over Q with prescribed invariants");
    lift_cmd->add_option("--spec", spec, "W(Q) JSON, inline or a file path")->required();

    for (auto* sub : app.get_subcommands({})) sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    const bool as_json = format == "json";

    if (hirz->parsed()) return cmd_hirzebruch(n, as_json);

    if (classify->parsed()) {
        print_witt_q(decompose_q(rational_form(form_path)), as_json);
        return 0;
    }

    if (fps->parsed()) {
        const char* name = witt_fp_structure(p) == FpStructure::KleinFour ? "KleinFour" : "Cyclic4";
        if (as_json)
            std::cout << json{{"p", p}, {"structure", name}}.dump() << "\n";
        else
            std::cout << name << "\n";
        return 0;
    }

    if (res->parsed()) {
        WittFp c = residue(rational_form(form_path), p, index);
        std::cout << (as_json ? to_json(c).dump() : fp_text(c)) << "\n";
        return 0;
    }

    if (snf->parsed()) {
        MatZ a = matz_from_json(read_json(matrix_path));
        SNFResult s = smith_normal_form(a);
        if (!check_snf(a, s)) throw std::logic_error("Smith normal form failed verification");
        if (as_json) {
            std::cout << to_json(s).dump() << "\n";
        } else {
            std::cout << "D =\n" << s.D << "\nU =\n" << s.U << "\nV =\n" << s.V << "\n";
        }
        return 0;
    }

    if (cplx->parsed()) {
        auto h = complex_cohomology(complex_from_json(read_json(matrix_path)));
        if (as_json) {
            std::cout << json(h).dump() << "\n";
        } else {
            for (std::size_t i = 0; i < h.size(); ++i) std::cout << "H^" << i << " = " << h[i] << "\n";
        }
        return 0;
    }

    if (lift_cmd->parsed()) {
        json target;
        if (!spec.empty() && spec.front() == '{') {
            try {
                target = json::parse(spec);
            } catch (const json::exception& e) {
                throw Error(Errc::ParseError, e.what());
            }
        } else {
            target = read_json(spec);
        }
        DiagonalForm d = lift_residues(witt_q_from_json(target));
        if (as_json) {
            std::cout << to_json(d).dump() << "\n";
        } else {
            std::cout << "<";
            for (std::size_t k = 0; k < d.entries.size(); ++k) std::cout << (k ? ", " : "") << d.entries[k];
            std::cout << ">\n";
        }
        return 0;
    }
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.code() == Errc::ParseError || e.code() == Errc::BadPrime) ? kExitInput : kExitDomain;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
