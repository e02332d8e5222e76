#include <random>

#include "helpers.hpp"
#include "tripart/realmap.hpp"

using namespace tripart;

namespace {

ConePoint pt(std::vector<Rational> x) { return ConePoint(std::move(x)); }

// Euclid's digits, or the same list with a final a written as a-1, 1.
bool same_cf(const std::vector<Int>& got, std::vector<long long> want) {
  const std::vector<Int> a(want.begin(), want.end());
  if (got == a) return true;
  std::vector<Int> b = a;
  if (b.empty()) return false;
  if (b.back() > 1) {
    --b.back();
    b.push_back(1);
    if (got == b) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("realmap") {
  TEST_CASE("classification") {
    CHECK(classify_cone(pt({3, 2})) == PartitionClass::Delta0);
    CHECK(classify_cone(pt({Rational(7, 2), 1})) == PartitionClass::Delta1);
    CHECK(classify_cone(pt({3, 2, 1})) == PartitionClass::DeltaD);
  }

  TEST_CASE("slow map steps") {
    CHECK(apply_slow(pt({3, 2})) == pt({2, 1}));
    CHECK(apply_slow(pt({Rational(7, 2), 1})) == pt({Rational(5, 2), 1}));
    CHECK(error_code([] { apply_slow(pt({3, 2, 1})); }) == "OnDiagonal");
    CHECK(error_code([] { pt({1, 2}); }) == "NotInCone");
    CHECK(error_code([] { pt({2, 0}); }) == "NotInCone");
    CHECK(error_code([] { pt({2}); }) == "NotInCone");
    // (n+1, n) goes T0 first for n >= 2
    for (Int n = 2; n <= 20; ++n) CHECK(slow_orbit(pt({n + 1, n}), 1).branches.at(0) == Branch::T0);
  }

  TEST_CASE("digits examples") {
    CHECK(cf_digits_via_map(7, 3, 100) == std::vector<Int>{2, 3});
    CHECK(oracle::euclid(3, 7) == std::vector<long long>{2, 3});
    CHECK(cf_digits_via_map(2, 1, 100) == std::vector<Int>{2});
    CHECK(error_code([] { cf_digits_via_map(1, 2, 10); }) == "BadRatio");
    CHECK(error_code([] { cf_digits_via_map(1, 0, 10); }) == "BadRatio");
  }

  TEST_CASE("digits match Euclid on random rationals") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 300; ++i) {
      const long long q = std::uniform_int_distribution<long long>(2, 5000)(rng);
      const long long p = std::uniform_int_distribution<long long>(1, q - 1)(rng);
      const auto digits = cf_digits_via_map(Rational(q), Rational(p), 1 << 20);
      const long long g = std::gcd(p, q);
      CHECK_MESSAGE(same_cf(digits, oracle::euclid(p / g, q / g)), p << "/" << q);
    }
  }

  TEST_CASE("the largest coordinate strictly decreases") {
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 1000) {
      const int m = 2 + static_cast<int>(rng() % 3);
      std::vector<Rational> x;
      Rational cur(std::uniform_int_distribution<long long>(1, 40)(rng), std::uniform_int_distribution<long long>(1, 9)(rng));
      for (int i = 0; i < m; ++i) {
        x.push_back(cur);
        cur += Rational(std::uniform_int_distribution<long long>(1, 40)(rng), std::uniform_int_distribution<long long>(1, 9)(rng));
      }
      std::reverse(x.begin(), x.end());
      const ConePoint p(x);
      if (classify_cone(p) == PartitionClass::DeltaD) continue;
      const ConePoint y = apply_slow(p);
      CHECK(y.coords().front() < p.coords().front());
      CHECK(y.dimension() == p.dimension());
      ++tested;
    }
  }

  TEST_CASE("constructed diagonal points") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const Rational a(std::uniform_int_distribution<long long>(1, 50)(rng), std::uniform_int_distribution<long long>(1, 7)(rng));
      const Rational b = a + Rational(std::uniform_int_distribution<long long>(1, 50)(rng), 3);
      CHECK(classify_cone(pt({b + a, b, a})) == PartitionClass::DeltaD);
      CHECK(classify_cone(pt({2 * a, a})) == PartitionClass::DeltaD);
    }
  }

  TEST_CASE("text forms") {
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-1/4") == Rational(-1, 4));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(error_code([] { parse_rational("1/0"); }) == "BadRatio");
    CHECK(error_code([] { parse_rational("abc"); }) == "BadRatio");
    CHECK(parse_cone_point("7/2,1") == pt({Rational(7, 2), 1}));
    CHECK(parse_cone_point("(3, 2, 1)") == pt({3, 2, 1}));
    CHECK(parse_cone_point(to_string(pt({Rational(7, 2), 1}))) == pt({Rational(7, 2), 1}));
    CHECK(euclidean_cf(Rational(3, 7)) == std::vector<Int>{2, 3});
  }

  TEST_CASE("orbits stop on the diagonal") {
    const ConeOrbit o = slow_orbit(pt({7, 3}), 50);
    CHECK(o.hit_diagonal);
    CHECK(o.points.size() == o.branches.size() + 1);
    CHECK(classify_cone(o.points.back()) == PartitionClass::DeltaD);
  }
}
