#include "gw/error.hpp"

namespace gw {

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::BadPrime: return "BadPrime";
    case Errc::SingularForm: return "SingularForm";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::NotNested: return "NotNested";
    case Errc::NoIntegralLattice: return "NoIntegralLattice";
    case Errc::NotTorsionFree: return "NotTorsionFree";
    case Errc::ComplexInvalid: return "ComplexInvalid";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace gw
