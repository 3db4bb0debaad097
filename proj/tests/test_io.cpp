#include "gw/error.hpp"
#include "gw/io.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace gw;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

void expect_parse_error(const std::function<void()>& f)
{
    try {
        f();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ParseError);
    }
}

}  // namespace

TEST(Json, Scalars)
{
    EXPECT_EQ(to_json(q(3)), json(3));
    EXPECT_EQ(to_json(q(-3, 4)), json("-3/4"));
    EXPECT_EQ(rational_from_json(json("6/8")), q(3, 4));
    EXPECT_EQ(rational_from_json(json(-5)), q(-5));
    BigInt huge("98765432109876543210987654321");
    EXPECT_EQ(to_json(huge), json(huge.str()));
    EXPECT_EQ(integer_from_json(to_json(huge)), huge);
    expect_parse_error([] { rational_from_json(json(1.5)); });
    EXPECT_THROW(rational_from_json(json("1/0")), Error);
}

TEST(Json, FormsRoundTrip)
{
    MatQ g(2, 2);
    g << q(1, 2), q(3), q(3), q(-7, 5);
    GramForm gram = make_gram(FieldTag::rationals(), g);
    FormInput back = form_from_json(to_json(gram));
    ASSERT_TRUE(back.gram.has_value());
    EXPECT_EQ(back.gram->gram, g);
    EXPECT_TRUE(back.field.is_q());

    DiagonalForm d{FieldTag::prime(7), {q(1), q(3), q(6)}};
    FormInput dback = form_from_json(to_json(d));
    ASSERT_TRUE(dback.diag.has_value());
    EXPECT_EQ(dback.diag->entries, d.entries);
    EXPECT_EQ(dback.field.p, 7);
    EXPECT_EQ(to_json(d)["field"], json::parse(R"({"Fp": 7})"));

    FormInput reduced = form_from_json(json::parse(R"({"field": {"Fp": 5}, "diag": [7, -1, "1/2"]})"));
    EXPECT_EQ(reduced.diag->entries, (std::vector<Rational>{q(2), q(4), q(3)}));
}

TEST(Json, FormErrors)
{
    expect_parse_error([] { form_from_json(json::parse(R"({"field": "R", "diag": [1]})")); });
    expect_parse_error([] { form_from_json(json::parse(R"({"gram": [[1, 2], [3]]})")); });
    expect_parse_error([] { form_from_json(json::parse(R"({"gram": [[1, 2], [3, 4]]})")); });
    expect_parse_error([] { form_from_json(json::parse(R"({"field": "Q"})")); });
    expect_parse_error([] { form_from_json(json::parse("[1, 2]")); });
}

TEST(Json, WittClassesRoundTrip)
{
    std::mt19937 rng(31);
    for (long p : {3L, 5L, 7L, 13L, 19L})
        for (int a = 0; a < 4; ++a) {
            WittFp c = WittFp::zero(p);
            if (c.kind() == FpStructure::KleinFour) {
                c.a = a & 1;
                c.b = a >> 1;
            } else {
                c.a = a;
            }
            json j = to_json(c);
            EXPECT_EQ(j["kind"], c.kind() == FpStructure::KleinFour ? "klein" : "cyclic");
            EXPECT_EQ(witt_fp_from_json(j, p), c);
        }

    WittQ t{BigInt(-3), 1, {{5, WittFp{5, 1, 1}}, {7, WittFp{7, 3, 0}}}};
    json j = to_json(t);
    EXPECT_EQ(j["signature"], -3);
    EXPECT_EQ(j["residues"]["7"]["value"], 3);
    EXPECT_EQ(j["residues"]["5"]["value"], json::parse("[1, 1]"));
    EXPECT_EQ(witt_q_from_json(j), t);
    EXPECT_EQ(witt_q_from_json(json::parse(j.dump())), t);
}

TEST(Json, WittQDropsZeroResidues)
{
    WittQ t = witt_q_from_json(json::parse(R"({"signature": 1, "residues": {"3": 0, "5": [0, 0], "7": 2}})"));
    EXPECT_EQ(t.residues.size(), 1u);
    EXPECT_EQ(t.residues.at(7).a, 2);
    expect_parse_error([] { witt_q_from_json(json::parse(R"({"residues": {"x": 1}})")); });
    EXPECT_THROW(witt_q_from_json(json::parse(R"({"residues": {"9": 1}})")), Error);
}

TEST(Json, MatricesRoundTrip)
{
    MatZ m(2, 3);
    m << BigInt(1), BigInt(-2), BigInt("123456789012345678901234567890"), BigInt(0), BigInt(4), BigInt(5);
    json j = to_json(m);
    EXPECT_EQ(j["rows"], 2);
    EXPECT_EQ(j["cols"], 3);
    EXPECT_EQ(matz_from_json(j), m);
    EXPECT_EQ(matz_from_json(json::parse(j.dump())), m);
    EXPECT_EQ(matz_from_json(json::parse("[[1, 2], [3, 4]]")).rows(), 2);

    MatF2 b = MatF2::Identity(3, 3);
    EXPECT_EQ(matf2_from_json(to_json(b)), b);

    expect_parse_error([] { matz_from_json(json::parse(R"({"rows": 3, "entries": [[1]]})")); });
    expect_parse_error([] { matz_from_json(json::parse(R"({"entries": [[1, 2], [3]]})")); });
    MatZ empty = matz_from_json(json::parse(R"({"rows": 0, "cols": 4, "entries": []})"));
    EXPECT_EQ(empty.rows(), 0);
    EXPECT_EQ(empty.cols(), 4);
}

TEST(Json, SnfAndComplex)
{
    MatZ a(2, 2);
    a << BigInt(2), BigInt(4), BigInt(6), BigInt(8);
    json s = to_json(smith_normal_form(a));
    EXPECT_EQ(s["invariant_factors"], json::parse("[2, 4]"));
    EXPECT_EQ(matz_from_json(s["D"]), matz_from_json(json::parse("[[2, 0], [0, 4]]")));

    ChainComplexF2 c = complex_from_json(json::parse(R"({"dims": [1, 2], "differentials": [[[1], [1]]]})"));
    EXPECT_EQ(c.dims, (std::vector<Eigen::Index>{1, 2}));
    EXPECT_EQ(complex_cohomology(c), (std::vector<Eigen::Index>{0, 1}));
    expect_parse_error([] { complex_from_json(json::parse(R"({"dims": [1]})")); });
}

TEST(Json, HirzebruchSchema)
{
    GWComplex c = build_complex(3);
    json j = to_json(c, cohomology(c));
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["cohomology"], json::parse("[1, 1, 0]"));
    EXPECT_EQ(j["d0"].size(), 8u);
    EXPECT_EQ(j["d0"][0].size(), 4u);
    EXPECT_EQ(j["d1"].size(), 4u);
    EXPECT_EQ(j["d1"][1], json::parse("[1, 0, 0, 0, 0, 0, 0, 1]"));
    EXPECT_EQ(j["labels"]["points"][3], "<0_zw>");
    EXPECT_EQ(j["dims"]["ker_d1"], 4);
    EXPECT_EQ(matf2_from_json(j["d0"]), c.d0);
}
