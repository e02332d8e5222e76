#include <fstream>

#include "helpers.hpp"
#include "tripart/enumerate.hpp"
#include "tripart/sets.hpp"

using namespace tripart;

TEST_SUITE("enumerate") {
  TEST_CASE("small counts") {
    CHECK(partitions_of(4).items.size() == 5);
    const auto seven = partitions_of(7).items;
    CHECK(seven.size() == 15);
    const auto s = as_set(seven);
    CHECK(s.count(make_partition({3, 2}, {1, 2})) == 1);
    CHECK(s.count(make_partition({1}, {7})) == 1);
    CHECK(partitions_of(11).items.size() == 56);
    CHECK(count_partitions(11) == 56);
  }

  TEST_CASE("the 56 listed partitions of 11") {
    std::ifstream in(TRIPART_FIXTURE_DIR "/partitions_11.txt");
    REQUIRE(in);
    std::set<Partition> listed;
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) listed.insert(parse_partition(line));
    CHECK(listed.size() == 56);
    CHECK(as_set(partitions_of(11).items) == listed);
  }

  TEST_CASE("filter reproduces the worked sets at 11") {
    CHECK(texts(filter(11, builtin("Delta01")).items) ==
          std::vector<std::string>{"(4,3)x[2,1]", "(5,4,2)x[1,1,1]", "(6,5)x[1,1]"});
    CHECK(texts(filter(11, builtin("D") & builtin("Delta0")).items) ==
          std::vector<std::string>{"(5,4,2)x[1,1,1]", "(6,5)x[1,1]", "(7,4)x[1,1]"});
    CHECK(filter(2, builtin("Delta1")).items.empty());
  }

  TEST_CASE("generator count matches the recurrence") {
    for (int n = 1; n <= 60; ++n) {
      Int c = 0;
      for_each_partition(n, [&](PartitionView) { ++c; });
      CHECK(c == count_partitions(n));
    }
    for (int n = 1; n <= 60; ++n) CHECK(count_partitions(n) == oracle::count(n));
    CHECK(count_partitions(60) == 966467);
  }

  TEST_CASE("generator matches the naive recursion in order") {
    for (int n = 1; n <= 25; ++n) {
      const auto lib = partitions_of(n).items;
      const auto ref = oracle::partitions(n);
      REQUIRE(lib.size() == ref.size());
      for (std::size_t i = 0; i < lib.size(); ++i) CHECK(oracle::from_lib(lib[i]) == ref[i]);
    }
  }

  TEST_CASE("stream views are canonical and valid") {
    std::vector<Partition> seen;
    for_each_partition(18, [&](PartitionView v) {
      const Partition p = to_partition(v);
      CHECK(p.size() == 18);
      if (!seen.empty()) CHECK(canonical_before(seen.back(), p));
      seen.push_back(p);
    });
    CHECK(partitions_of(18).items == seen);
  }

  TEST_CASE("argument errors") {
    CHECK(error_code([] { partitions_of(0); }) == "NZero");
    CHECK(error_code([] { partitions_of(61); }) == "AboveDeskCeiling");
    EnumerateOptions wide;
    wide.allow_above_ceiling = true;
    CHECK(partitions_of(62, wide).items.size() == static_cast<std::size_t>(count_partitions(62)));
    EnumerateOptions tight;
    tight.desk_ceiling = 10;
    CHECK(error_code([&] { partitions_of(11, tight); }) == "AboveDeskCeiling");
  }
}
