#include "helpers.hpp"
#include "tripart/enumerate.hpp"
#include "tripart/trimap.hpp"

using namespace tripart;

TEST_SUITE("trimap") {
  TEST_CASE("T0 examples") {
    CHECK(apply_T0(P("(6,5,4,2)x[1,1,1,1]")) == P("(5,4,2,1)x[2,1,1,1]"));
    CHECK(apply_T0(P("(6,5)x[1,1]")) == P("(5,1)x[2,1]"));
    CHECK(apply_T0(P("(4,3)x[2,1]")) == P("(3,1)x[3,2]"));
  }

  TEST_CASE("T1 examples") {
    CHECK(apply_T1(P("(9,5,4,2)x[1,1,1,1]")) == P("(7,5,4,2)x[1,1,1,2]"));
    CHECK(apply_T1(P("(5,1)x[2,1]")) == P("(4,1)x[2,3]"));
    CHECK(apply_T1(P("(3,1)x[3,2]")) == P("(2,1)x[3,5]"));
  }

  TEST_CASE("TD examples") {
    CHECK(apply_TD(P("(6,5,4,1)x[1,1,1,1]")) == P("(5,4,1)x[2,1,2]"));
    CHECK(apply_TD(P("(6,3)x[1,1]")) == P("(3)x[3]"));
    // k1+k2 = 5, k3 = 4, k1+k4 = 7.
    CHECK(apply_TD(P("(11,8,6,3)x[2,3,4,5]")) == P("(8,6,3)x[5,4,7]"));
  }

  TEST_CASE("dispatch and errors") {
    const MapStep s = apply_T(P("(4,2,1)x[2,1,1]"));
    CHECK(s.branch == Branch::T1);
    CHECK(s.output == P("(3,2,1)x[2,1,3]"));
    CHECK(error_code([] { apply_T(P("(1)x[7]")); }) == "DimensionOne");
    CHECK(error_code([] { apply_T0(P("(9,5,4,2)x[1,1,1,1]")); }) == "WrongBranch");
    CHECK(error_code([] { apply_branch(P("(6,3)x[1,1]"), Branch::T1); }) == "WrongBranch");
    CHECK(error_code([] { apply_T0_inverse(P("(4,2,1)x[1,1,1]")); }) == "NotInM0");
    CHECK(error_code([] { apply_T1_inverse(P("(3,1)x[2,2]")); }) == "NotInM1");
  }

  TEST_CASE("orbits") {
    const Orbit o = orbit(P("(6,5)x[1,1]"), 2);
    REQUIRE(o.steps.size() == 2);
    CHECK(o.steps[0].branch == Branch::T0);
    CHECK(o.steps[1].branch == Branch::T1);
    CHECK(o.terminal == P("(4,1)x[2,3]"));
    CHECK(orbit(P("(7)x[1]"), 5).steps.empty());
    const Orbit d = orbit(P("(6,3)x[1,1]"), 5);
    REQUIRE(d.steps.size() == 1);
    CHECK(d.steps[0].branch == Branch::TD);
    CHECK(d.terminal == P("(3)x[3]"));
  }

  TEST_CASE("TD part injectivity") {
    CHECK(td_part_injectivity_check(P("(11,8,6,3)x[2,3,4,5]"), P("(11,8,6,3)x[1,4,4,6]")));
    // Both land on (8,6,3)x[5,4,7].
    CHECK(apply_TD(P("(11,8,6,3)x[1,4,4,6]")) == apply_TD(P("(11,8,6,3)x[2,3,4,5]")));
  }

  TEST_CASE("every branch matches the oracle formulas") {
    for (int n = 2; n <= 26; ++n)
      for (const auto& q : oracle::partitions(n)) {
        if (q.m() < 2) continue;
        const MapStep s = apply_T(oracle::to_lib(q));
        CHECK(oracle::from_lib(s.output) == oracle::T(q));
        CHECK(static_cast<int>(s.branch) == oracle::cone(q));
      }
  }

  TEST_CASE("size, dimension and round trips") {
    for (int n = 2; n <= 28; ++n)
      for (const auto& p : partitions_of(n).items) {
        if (p.dimension() < 2) continue;
        const MapStep s = apply_T(p);
        CHECK(s.output.size() == n);
        if (s.branch == Branch::TD) {
          CHECK(s.output.dimension() == p.dimension() - 1);
        } else {
          CHECK(s.output.dimension() == p.dimension());
        }
        if (s.branch == Branch::T0) {
          CHECK(in_M0(s.output.view()));
          CHECK(apply_T0_inverse(s.output) == p);
        }
        if (s.branch == Branch::T1) {
          CHECK(in_M1(s.output.view()));
          CHECK(apply_T1_inverse(s.output) == p);
        }
        if (in_M0(p.view())) CHECK(apply_T0(apply_T0_inverse(p)) == p);
        if (in_M1(p.view())) CHECK(apply_T1(apply_T1_inverse(p)) == p);
      }
  }

  TEST_CASE("TD agrees with either neighbouring branch on the boundary") {
    // On the diagonal l1 = l2 + lm, so l1 - l2 = lm and l1 - lm = l2. Running
    // the T0 or T1 formula there yields a repeated part; merging it gives TD.
    for (int n = 2; n <= 26; ++n)
      for (const auto& q : oracle::partitions(n)) {
        if (oracle::cone(q) != 2) continue;
        const oracle::PM td = oracle::from_lib(apply_TD(oracle::to_lib(q)));
        oracle::Seq s0, s1;
        for (int i = 1; i < q.m(); ++i) s0.insert(s0.end(), static_cast<std::size_t>(i == 1 ? q.k[0] + q.k[1] : q.k[static_cast<std::size_t>(i)]), q.l[static_cast<std::size_t>(i)]);
        s0.insert(s0.end(), static_cast<std::size_t>(q.k[0]), q.l[0] - q.l[1]);
        s1.insert(s1.end(), static_cast<std::size_t>(q.k[0]), q.l[0] - q.l.back());
        for (int i = 1; i < q.m(); ++i) s1.insert(s1.end(), static_cast<std::size_t>(i == q.m() - 1 ? q.k[0] + q.k.back() : q.k[static_cast<std::size_t>(i)]), q.l[static_cast<std::size_t>(i)]);
        CHECK(oracle::compress(s0) == td);
        CHECK(oracle::compress(s1) == td);
      }
  }

  TEST_CASE("TD keeps the multiplicity sum plus k1") {
    for (int n = 2; n <= 26; ++n)
      for (const auto& p : partitions_of(n).items) {
        if (p.dimension() < 2 || classify(p) != PartitionClass::DeltaD) continue;
        Int before = 0, after = 0;
        for (Int k : p.mults()) before += k;
        const Partition q = apply_TD(p);
        for (Int k : q.mults()) after += k;
        CHECK(after == before + p.mult(1));
      }
  }
}
