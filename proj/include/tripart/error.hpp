#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tripart {

// Every contract violation in the library maps to one of these codes.
enum class Errc {
  // core
  NonDecreasingParts,
  NonPositiveEntry,
  LengthMismatch,
  EmptyPartition,
  NotSorted,
  Overflow,
  BadPartitionText,
  // enumerate
  NZero,
  AboveDeskCeiling,
  // trimap
  WrongBranch,
  DimensionOne,
  NotInM0,
  NotInM1,
  // sets
  SyntaxError,
  UnknownSymbol,
  UnknownSet,
  EmptyWord,
  // identities
  DNonPositive,
  BranchMismatch,
  NotInjective,
  NotOnto,
  ImageOutsideCodomain,
  // realmap
  NotInCone,
  OnDiagonal,
  BadRatio,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  /// For parser errors: `position` is a byte offset into the parsed text.
  Error(Errc code, const std::string& message, std::size_t position);

  Errc code() const noexcept { return code_; }
  bool has_position() const noexcept { return has_position_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Errc code_;
  bool has_position_ = false;
  std::size_t position_ = 0;
};

}  // namespace tripart
