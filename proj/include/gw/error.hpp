#pragma once

#include <stdexcept>
#include <string>

namespace gw {

enum class Errc {
    ZeroInput,
    BadPrime,
    SingularForm,
    DependentBasis,
    SearchSpaceTooLarge,
    ZeroEntry,
    MixedFields,
    NotRepresentable,
    NotNested,
    NoIntegralLattice,
    NotTorsionFree,
    ComplexInvalid,
    NotAComplex,
    ParseError
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace gw
