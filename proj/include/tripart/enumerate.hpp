#pragma once

#include <utility>
#include <vector>

#include "tripart/core.hpp"

namespace tripart {

class SetPredicate;

inline constexpr int kDefaultDeskCeiling = 60;

/// n above `desk_ceiling` is refused unless `allow_above_ceiling` is set.
struct EnumerateOptions {
  int desk_ceiling = kDefaultDeskCeiling;
  bool allow_above_ceiling = false;
};

/*
 * Streaming generator over the partitions of n in canonical order (descending
 * lexicographic on the expanded sequence). The view returned by current()
 * stays valid until the next call to advance(). Single consumer.
 */
class PartitionStream {
 public:
  explicit PartitionStream(int n, EnumerateOptions options = {});

  bool done() const noexcept { return done_; }
  PartitionView current() const noexcept { return {parts_, mults_}; }
  void advance();

 private:
  std::vector<Int> parts_;
  std::vector<Int> mults_;
  bool done_ = false;
};

struct PartitionList {
  int n = 0;
  std::vector<Partition> items;
};

PartitionList partitions_of(int n, EnumerateOptions options = {});

/// p(n) by the pentagonal-number recurrence; independent of the generator.
Int count_partitions(int n);

PartitionList filter(int n, const SetPredicate& pred, EnumerateOptions options = {});

template <class F>
void for_each_partition(int n, F&& f, EnumerateOptions options = {}) {
  for (PartitionStream s(n, options); !s.done(); s.advance()) f(s.current());
}

}  // namespace tripart
