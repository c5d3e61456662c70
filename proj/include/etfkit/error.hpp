#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace etfkit {

enum class Errc {
  // linalg / argument checks
  InvalidArgument,
  SizeMismatch,
  NotSymmetric,
  // frames
  NonUnitColumns,
  DiagonalNotUnit,
  OffDiagonalNotEquimodular,
  NotIdempotentScaled,
  NoComplement,
  BetaZero,
  LengthMismatch,
  // graphs
  NotAdjacency,
  NotRegular,
  NotStronglyRegular,
  DegenerateDiscriminant,
  NonIntegralMultiplicity,
  NegativeParameter,
  // correspondence
  InvalidShape,
  NonIntegralDegree,
  OddDegree,
  NonIntegralDimension,
  NotAnEtf,
  NotAnSrg,
  NotEligible,
  InternalInconsistency,
  // generators
  InvalidDesign,
  UnsupportedHadamardOrder,
  NotPrime,
  WrongResidueClass,
  // io / cli
  Parse,
  Io,
  Usage,
};

std::string_view errc_name(Errc code) noexcept;

/// True for the codes the command line maps to exit status 2.
constexpr bool is_io_or_usage(Errc code) noexcept {
  return code == Errc::Parse || code == Errc::Io || code == Errc::Usage;
}

/// Exception carrying a machine-checkable code, plus an optional 0-based
/// index pair locating the offending entry (vertex pair, matrix entry).
class Error : public std::runtime_error {
 public:
  using Witness = std::pair<std::size_t, std::size_t>;

  Error(Errc code, const std::string& what, std::optional<Witness> witness = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        detail_(what),
        witness_(witness) {}

  Errc code() const noexcept { return code_; }
  /// Message without the leading code name.
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<Witness> witness_;
};

}  // namespace etfkit
