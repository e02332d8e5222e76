#include "helpers.hpp"
#include "tripart/identities.hpp"
#include "tripart/sets.hpp"

using namespace tripart;

namespace {

Int oracle_count(const oracle::Pred& pred, int n) {
  Int c = 0;
  for (const auto& q : oracle::partitions(n)) c += pred(q);
  return c;
}

const Verdict& verdict(const CountReport& r, const std::string& prefix) {
  for (const auto& v : r.verdicts)
    if (v.claim.rfind(prefix, 0) == 0) return v;
  FAIL("no verdict starting with " << prefix);
  return r.verdicts.front();
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("count_set examples") {
    CHECK(count_set(builtin("Delta01"), 11) == 3);
    CHECK(count_set(builtin("D"), 11) == 12);
    CHECK(count_set(builtin("O"), 1) == 1);
    CHECK(count_set(builtin("E0"), 11) == 3);
    CHECK(count_set(builtin("E1"), 11) == 8);
    CHECK(count_set(builtin("ED"), 11) == 0);
  }

  TEST_CASE("counts match the oracle") {
    const auto sets = oracle::named_sets();
    for (const char* name : {"D", "O", "E0", "E1", "ED", "F0", "F1", "Delta0", "M0", "Delta11", "T0T1Delta10"})
      for (int n = 1; n <= 22; ++n) CHECK_MESSAGE(count_set(builtin(name), n) == oracle_count(sets.at(name), n), name << " n=" << n);
  }

  TEST_CASE("arithmetic terms") {
    for (Int n = 1; n <= 200; ++n) CHECK(odd_divisor_count(n) == oracle::odd_divisors(n));
    CHECK(divisor_count(6) == 4);
    CHECK(divisor_count(1) == 1);
    CHECK(odd_divisor_count(11) == 2);
    CHECK(odd_divisor_count(9) == 3);
  }

  TEST_CASE("equicount") {
    CHECK(verify_equicount(builtin("Delta0"), builtin("M0"), 40).passed());
    CHECK(verify_equicount(builtin("Delta1"), builtin("M1"), 40).passed());
    const CountReport bad = verify_equicount(builtin("D"), builtin("M0"), 12);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.verdicts.size() == 1);
    const Verdict& v = bad.verdicts.front();
    CHECK_FALSE(v.pass);
    REQUIRE(v.counterexample);
    // first n where the oracle counts differ
    int first = 0;
    for (int n = 1; n <= 12 && !first; ++n)
      if (oracle_count(oracle::named_sets().at("D"), n) != oracle_count(oracle::named_sets().at("M0"), n)) first = n;
    CHECK(*v.counterexample == first);
    CHECK(texts(v.only_left) == std::vector<std::string>{"(1)x[1]"});
    CHECK(v.only_right.empty());
  }

  TEST_CASE("symmetric difference reported when counts agree but sets differ") {
    // Same count at every n, different members: SameSet must catch it.
    const CountReport r = run_counts("same-set", {CountColumn::of(builtin("Delta0")), CountColumn::of(builtin("M0"))},
                                     {{Claim::Kind::SameSet, "Delta0 == M0", {0}, {1}, true}}, 1, 6);
    CHECK_FALSE(r.passed());
    const Verdict& v = r.verdicts.front();
    REQUIRE(v.counterexample);
    CHECK(*v.counterexample == 5);
    CHECK(texts(v.only_left) == std::vector<std::string>{"(3,2)x[1,1]"});
    CHECK(texts(v.only_right) == std::vector<std::string>{"(2,1)x[2,1]"});
  }

  TEST_CASE("certificates") {
    const BijectionCertificate c = certify_bijection(builtin("D") & builtin("Delta0"), builtin("E0"), "0", 11);
    REQUIRE(c.pairs.size() == 3);
    std::map<Partition, Partition> pairs;
    for (const auto& p : c.pairs) pairs.emplace(p.source, p.image);
    CHECK(pairs.at(P("(7,4)x[1,1]")) == P("(4,3)x[2,1]"));
    CHECK(pairs.at(P("(6,5)x[1,1]")) == P("(5,1)x[2,1]"));
    CHECK(pairs.at(P("(5,4,2)x[1,1,1]")) == P("(4,2,1)x[2,1,1]"));

    const auto delta0 = oracle::named_sets().at("Delta0");
    CHECK(static_cast<Int>(certify_bijection(builtin("Delta0"), builtin("M0"), "0", 20).pairs.size()) ==
          oracle_count(delta0, 20));
    CHECK(error_code([] { certify_bijection(builtin("Delta0"), builtin("M1"), "0", 11); }) == "NotOnto");
    CHECK(error_code([] { certify_bijection(builtin("Delta0"), builtin("M0"), "1", 11); }) == "BranchMismatch");
    CHECK(error_code([] { certify_bijection(builtin("Delta0"), builtin("M0") & parse_predicate("dim >= 3"), "0", 11); }) ==
          "ImageOutsideCodomain");
    // (3,2,1)x[1,2,2] and (3,2,1)x[2,1,1] share an image
    CHECK(error_code([] { certify_bijection(builtin("DeltaD") & parse_predicate("dim = 3"), builtin("P"), "D", 9); }) ==
          "NotInjective");
  }

  TEST_CASE("certificate success implies equicount") {
    const std::vector<std::tuple<const char*, const char*, const char*>> rows{
        {"Delta0", "M0", "0"}, {"Delta1", "M1", "1"}, {"Delta01", "T1T0Delta01", "01"}, {"Delta11", "T1T1Delta11", "11"}};
    for (const auto& [a, b, route] : rows)
      for (int n = 1; n <= 24; ++n) {
        bool certified = true;
        try {
          certify_bijection(builtin(a), builtin(b), route, n);
        } catch (const Error&) {
          certified = false;
        }
        if (certified) CHECK(count_set(builtin(a), n) == count_set(builtin(b), n));
      }
  }

  TEST_CASE("theorem verifiers") {
    CHECK(verify_delta_m(30).passed());
    for (int d : {1, 3}) CHECK(verify_offset_theorem(d, 30).passed());
    CHECK(error_code([] { verify_offset_theorem(0, 5); }) == "DNonPositive");
    CHECK(error_code([] { verify_gauss_theorem(0, 5); }) == "DNonPositive");
    CHECK(verify_gauss_theorem(1, 30).passed());
    CHECK(verify_gauss_theorem(2, 30).passed());
    const CountReport cyl = verify_cylinder_theorems(30);
    CHECK(cyl.passed());
    CHECK(cyl.count(11, 0) >= 0);
    CHECK(error_code([] { verify_theorem("nonsense", 5, 1); }) == "UnknownSet");
    for (const auto& name : theorem_names()) CHECK_MESSAGE(verify_theorem(name, 14, 2).passed(), name);
  }

  TEST_CASE("distinct theorem decomposition") {
    const CountReport r = verify_distinct_theorem(60);
    CHECK(r.passed());
    const auto& cols = r.columns;
    auto col = [&](const std::string& name) {
      const auto it = std::find(cols.begin(), cols.end(), name);
      REQUIRE(it != cols.end());
      return static_cast<std::size_t>(it - cols.begin());
    };
    CHECK(r.count(11, col("D")) == 12);
    CHECK(r.count(11, col("E0")) == 3);
    CHECK(r.count(11, col("E1")) == 8);
    CHECK(r.count(11, col("ED")) == 0);
    CHECK(r.count(3, col("D")) == 2);
    CHECK(r.count(1, col("D")) == 1);
    // independent recount of the right-hand side
    const auto sets = oracle::named_sets();
    for (int n = 1; n <= 24; ++n)
      CHECK(oracle_count(sets.at("D"), n) ==
            1 + oracle_count(sets.at("E0"), n) + oracle_count(sets.at("E1"), n) + oracle_count(sets.at("ED"), n) +
                (n % 3 == 0));
  }

  TEST_CASE("odd theorem and Euler chain") {
    CHECK(verify_odd_theorem(60).passed());
    const CountReport e = verify_euler_chain(30);
    CHECK(e.passed());
    const auto sets = oracle::named_sets();
    CHECK(oracle_count(sets.at("D"), 7) == 5);
    CHECK(oracle_count(sets.at("O"), 7) == 5);
    for (int n = 1; n <= 24; ++n)
      CHECK(oracle_count(sets.at("O"), n) ==
            oracle::odd_divisors(n) + oracle_count(sets.at("F0"), n) + oracle_count(sets.at("F1"), n));
    CHECK(oracle_count(sets.at("O"), 11) == 12);
  }

  TEST_CASE("reports are deterministic") {
    const CountReport a = verify_cylinder_theorems(20, 1);
    const CountReport b = verify_cylinder_theorems(20, 1);
    CHECK(a.columns == b.columns);
    CHECK(a.counts == b.counts);
    VerifyOptions one;
    one.threads = 1;
    CHECK(verify_cylinder_theorems(20, 1, one).counts == a.counts);
  }
}
