#include "tripart/enumerate.hpp"

#include "tripart/sets.hpp"

namespace tripart {

namespace {

void check_n(int n, const EnumerateOptions& options) {
  if (n < 1) throw Error(Errc::NZero, "n must be at least 1, got " + std::to_string(n));
  if (n > options.desk_ceiling && !options.allow_above_ceiling)
    throw Error(Errc::AboveDeskCeiling, "n = " + std::to_string(n) + " exceeds the desk ceiling " +
                                            std::to_string(options.desk_ceiling));
}

}  // namespace

PartitionStream::PartitionStream(int n, EnumerateOptions options) {
  check_n(n, options);
  parts_.push_back(n);
  mults_.push_back(1);
}

void PartitionStream::advance() {
  if (done_) return;
  // Pull off the trailing ones; they are redistributed below.
  Int spill = 0;
  if (parts_.back() == 1) {
    spill = mults_.back();
    parts_.pop_back();
    mults_.pop_back();
  }
  if (parts_.empty()) {
    done_ = true;
    return;
  }
  // Lower one copy of the smallest part x > 1 and refill greedily with x-1.
  const Int x = parts_.back();
  if (--mults_.back() == 0) {
    parts_.pop_back();
    mults_.pop_back();
  }
  spill += x;
  const Int y = x - 1;
  parts_.push_back(y);
  mults_.push_back(spill / y);
  if (const Int rem = spill % y; rem > 0) {
    parts_.push_back(rem);
    mults_.push_back(1);
  }
}

PartitionList partitions_of(int n, EnumerateOptions options) {
  PartitionList out{n, {}};
  for_each_partition(n, [&](PartitionView v) { out.items.push_back(to_partition(v)); }, options);
  return out;
}

Int count_partitions(int n) {
  if (n < 1) throw Error(Errc::NZero, "n must be at least 1, got " + std::to_string(n));
  std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      const bool plus = (j % 2) == 1;
      auto add = [&](int g) {
        if (g > k) return;
        acc = plus ? checked_add(acc, p[static_cast<std::size_t>(k - g)])
                   : checked_sub(acc, p[static_cast<std::size_t>(k - g)]);
      };
      add(g1);
      add(j * (3 * j + 1) / 2);
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

PartitionList filter(int n, const SetPredicate& pred, EnumerateOptions options) {
  PartitionList out{n, {}};
  for_each_partition(
      n,
      [&](PartitionView v) {
        if (pred.contains(v)) out.items.push_back(to_partition(v));
      },
      options);
  return out;
}

}  // namespace tripart
