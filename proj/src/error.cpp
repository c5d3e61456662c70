#include "etfkit/error.hpp"

namespace etfkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NonUnitColumns: return "NonUnitColumns";
    case Errc::DiagonalNotUnit: return "DiagonalNotUnit";
    case Errc::OffDiagonalNotEquimodular: return "OffDiagonalNotEquimodular";
    case Errc::NotIdempotentScaled: return "NotIdempotentScaled";
    case Errc::NoComplement: return "NoComplement";
    case Errc::BetaZero: return "BetaZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAdjacency: return "NotAdjacency";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotStronglyRegular: return "NotStronglyRegular";
    case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::NegativeParameter: return "NegativeParameter";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::NonIntegralDegree: return "NonIntegralDegree";
    case Errc::OddDegree: return "OddDegree";
    case Errc::NonIntegralDimension: return "NonIntegralDimension";
    case Errc::NotAnEtf: return "NotAnEtf";
    case Errc::NotAnSrg: return "NotAnSrg";
    case Errc::NotEligible: return "NotEligible";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::InvalidDesign: return "InvalidDesign";
    case Errc::UnsupportedHadamardOrder: return "UnsupportedHadamardOrder";
    case Errc::NotPrime: return "NotPrime";
    case Errc::WrongResidueClass: return "WrongResidueClass";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace etfkit
