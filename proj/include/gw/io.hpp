#pragma once

#include "gw/forms.hpp"
#include "gw/hirzebruch.hpp"
#include "gw/homology.hpp"
#include "gw/witt.hpp"

#include <json.hpp>

#include <optional>

namespace gw {

using nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& r);
BigInt integer_from_json(const json& j);
json to_json(const BigInt& b);

// {"field": "Q" | {"Fp": p}, "gram": [[...]]} or {"field": ..., "diag": [...]}
struct FormInput {
    FieldTag field;
    std::optional<GramForm> gram;
    std::optional<DiagonalForm> diag;

    DiagonalForm diagonal() const;
};

FormInput form_from_json(const json& j);
json to_json(const GramForm& g);
json to_json(const DiagonalForm& d);

json to_json(const WittFp& c);
json to_json(const WittQ& c);
WittFp witt_fp_from_json(const json& j, long p);
WittQ witt_q_from_json(const json& j);

json to_json(const MatZ& m);
json to_json(const MatF2& m);
MatZ matz_from_json(const json& j);
MatF2 matf2_from_json(const json& j);

json to_json(const SNFResult& s);
ChainComplexF2 complex_from_json(const json& j);

json to_json(const GWComplex& c, const Cohomology& h);

}  // namespace gw
