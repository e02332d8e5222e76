#include "tripart/error.hpp"

namespace tripart {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonDecreasingParts: return "NonDecreasingParts";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyPartition: return "EmptyPartition";
    case Errc::NotSorted: return "NotSorted";
    case Errc::Overflow: return "Overflow";
    case Errc::BadPartitionText: return "BadPartitionText";
    case Errc::NZero: return "NZero";
    case Errc::AboveDeskCeiling: return "AboveDeskCeiling";
    case Errc::WrongBranch: return "WrongBranch";
    case Errc::DimensionOne: return "DimensionOne";
    case Errc::NotInM0: return "NotInM0";
    case Errc::NotInM1: return "NotInM1";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::UnknownSet: return "UnknownSet";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::DNonPositive: return "DNonPositive";
    case Errc::BranchMismatch: return "BranchMismatch";
    case Errc::NotInjective: return "NotInjective";
    case Errc::NotOnto: return "NotOnto";
    case Errc::ImageOutsideCodomain: return "ImageOutsideCodomain";
    case Errc::NotInCone: return "NotInCone";
    case Errc::OnDiagonal: return "OnDiagonal";
    case Errc::BadRatio: return "BadRatio";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

Error::Error(Errc code, const std::string& message, std::size_t position)
    : std::runtime_error(std::string(errc_name(code)) + " at " + std::to_string(position) +
                         ": " + message),
      code_(code),
      has_position_(true),
      position_(position) {}

}  // namespace tripart
