#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tripart/error.hpp"

namespace tripart {

using Int = std::int64_t;

// Checked arithmetic. Desk-scale values never come close to the limits, so an
// overflow is always a bug and raises Errc::Overflow.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Which piece of the trichotomy a partition sits in. Dim1 partitions are
/// outside the domain of the triangle map.
enum class PartitionClass { Delta0, Delta1, DeltaD, Dim1 };

std::string_view to_string(PartitionClass c) noexcept;

/*
 * Non-owning view of a partition in part x multiplicity form. Used on the hot
 * enumeration path so predicates can be evaluated without allocating.
 * Indices into parts/mults are zero-based here; the DSL and the text form are
 * one-based.
 */
struct PartitionView {
  std::span<const Int> parts;
  std::span<const Int> mults;

  int dimension() const noexcept { return static_cast<int>(parts.size()); }
  Int size() const;
  Int largest() const { return parts.front(); }
  Int smallest() const { return parts.back(); }
};

PartitionClass classify(PartitionView p);

/*
 * A partition (l1,...,lm) x [k1,...,km]: strictly decreasing positive parts,
 * each with a positive multiplicity. Immutable once constructed.
 */
class Partition {
 public:
  /// Validating constructor; see make_partition.
  Partition(std::vector<Int> parts, std::vector<Int> mults);

  std::span<const Int> parts() const noexcept { return parts_; }
  std::span<const Int> mults() const noexcept { return mults_; }
  /// One-based accessors, matching the usual l_i / k_i notation.
  Int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  Int mult(int i) const { return mults_.at(static_cast<std::size_t>(i - 1)); }

  int dimension() const noexcept { return static_cast<int>(parts_.size()); }
  Int size() const { return view().size(); }
  PartitionView view() const noexcept { return {parts_, mults_}; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
  std::vector<Int> mults_;
};

Partition make_partition(std::vector<Int> parts, std::vector<Int> mults);
Partition to_partition(PartitionView v);

/// Normalizes a weakly decreasing sequence by concatenating equal parts.
Partition from_weak_sequence(std::span<const Int> parts_with_repeats);

/// Repeats each part k_i times.
std::vector<Int> expand(const Partition& p);

inline Int size(const Partition& p) { return p.size(); }
inline int dimension(const Partition& p) { return p.dimension(); }
inline PartitionClass classify(const Partition& p) { return classify(p.view()); }

/// Canonical enumeration order: descending lexicographic on the expanded
/// sequences, so (n)x[1] comes first and (1)x[n] last.
bool canonical_before(PartitionView a, PartitionView b);
bool canonical_before(const Partition& a, const Partition& b);

enum class Glyph { Ascii, Times };

/// "(5,4,2)x[1,1,1]", or with the multiplication sign for Glyph::Times.
std::string to_string(const Partition& p, Glyph glyph = Glyph::Ascii);
std::string to_string(PartitionView p, Glyph glyph = Glyph::Ascii);

/// Accepts 'x', 'X', '*' or U+00D7 between the two lists; whitespace is free.
Partition parse_partition(std::string_view text);

}  // namespace tripart
