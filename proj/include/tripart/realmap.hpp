#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "tripart/core.hpp"
#include "tripart/trimap.hpp"

namespace tripart {

using Rational = boost::rational<Int>;

/// A point x1 > x2 > ... > xm > 0 of the real cone, m >= 2, with exact coordinates.
class ConePoint {
 public:
  /// Throws NotInCone.
  explicit ConePoint(std::vector<Rational> coords);

  const std::vector<Rational>& coords() const noexcept { return x_; }
  int dimension() const noexcept { return static_cast<int>(x_.size()); }

  friend bool operator==(const ConePoint&, const ConePoint&) = default;

 private:
  std::vector<Rational> x_;
};

/// Delta0, Delta1 or DeltaD, exactly.
PartitionClass classify_cone(const ConePoint& x);

/// One step of the slow map. Throws OnDiagonal on DeltaD.
ConePoint apply_slow(const ConePoint& x);

struct ConeOrbit {
  std::vector<ConePoint> points;  // start, then one point per step
  std::vector<Branch> branches;   // T0 or T1 for each step
  bool hit_diagonal = false;
};

/// Iterates until the diagonal or `max_steps`.
ConeOrbit slow_orbit(const ConePoint& start, int max_steps);

/*
 * Continued fraction digits of x2/x1 read off the slow map in dimension two.
 * A run of r T1 steps closed by a T0 step gives the digit r+1; a final run of
 * r steps that lands on the diagonal gives r+2. Throws BadRatio unless
 * x1 > x2 > 0.
 */
std::vector<Int> cf_digits_via_map(const Rational& x1, const Rational& x2, int max_steps);

/// Euclid on r in (0, 1): r = [0; a1, a2, ...] with the last digit >= 2.
std::vector<Int> euclidean_cf(const Rational& r);

/// "7/2", "3", "-1/4". Throws BadRatio.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// "7/2,1" or "(3, 2, 1)". Throws BadRatio or NotInCone.
ConePoint parse_cone_point(std::string_view text);
std::string to_string(const ConePoint& x);

}  // namespace tripart
