#include "tripart/realmap.hpp"

#include <cctype>
#include <charconv>

namespace tripart {

ConePoint::ConePoint(std::vector<Rational> coords) : x_(std::move(coords)) {
  if (x_.size() < 2) throw Error(Errc::NotInCone, "a cone point needs at least two coordinates");
  if (x_.back() <= 0) throw Error(Errc::NotInCone, "coordinates must be positive");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] < x_[i - 1])) throw Error(Errc::NotInCone, "coordinates must be strictly decreasing");
}

PartitionClass classify_cone(const ConePoint& x) {
  const auto& c = x.coords();
  // At m = 2 this compares against 2*x2.
  const Rational rhs = c[1] + c.back();
  if (c[0] < rhs) return PartitionClass::Delta0;
  if (c[0] > rhs) return PartitionClass::Delta1;
  return PartitionClass::DeltaD;
}

ConePoint apply_slow(const ConePoint& x) {
  const auto& c = x.coords();
  switch (classify_cone(x)) {
    case PartitionClass::Delta0: {
      std::vector<Rational> y(c.begin() + 1, c.end());
      y.push_back(c[0] - c[1]);
      return ConePoint(std::move(y));
    }
    case PartitionClass::Delta1: {
      std::vector<Rational> y = c;
      y[0] = c[0] - c.back();
      return ConePoint(std::move(y));
    }
    default:
      throw Error(Errc::OnDiagonal, to_string(x) + " lies on the diagonal, where the map is not defined");
  }
}

ConeOrbit slow_orbit(const ConePoint& start, int max_steps) {
  ConeOrbit o;
  o.points.push_back(start);
  for (int i = 0; i < max_steps; ++i) {
    const auto cls = classify_cone(o.points.back());
    if (cls == PartitionClass::DeltaD) {
      o.hit_diagonal = true;
      break;
    }
    o.branches.push_back(cls == PartitionClass::Delta0 ? Branch::T0 : Branch::T1);
    o.points.push_back(apply_slow(o.points.back()));
  }
  if (!o.hit_diagonal && classify_cone(o.points.back()) == PartitionClass::DeltaD) o.hit_diagonal = true;
  return o;
}

std::vector<Int> cf_digits_via_map(const Rational& x1, const Rational& x2, int max_steps) {
  if (!(x1 > x2 && x2 > 0)) throw Error(Errc::BadRatio, "need x1 > x2 > 0");
  std::vector<Int> digits;
  ConePoint x({x1, x2});
  Int run = 0;
  for (int step = 0; step < max_steps; ++step) {
    const auto cls = classify_cone(x);
    if (cls == PartitionClass::DeltaD) {
      digits.push_back(run + 2);
      return digits;
    }
    if (cls == PartitionClass::Delta1) {
      ++run;
    } else {
      digits.push_back(run + 1);
      run = 0;
    }
    x = apply_slow(x);
  }
  if (classify_cone(x) == PartitionClass::DeltaD) digits.push_back(run + 2);
  return digits;
}

std::vector<Int> euclidean_cf(const Rational& r) {
  if (!(r > 0 && r < 1)) throw Error(Errc::BadRatio, "need 0 < r < 1");
  std::vector<Int> digits;
  Int p = r.numerator(), q = r.denominator();
  // r = p/q; invert and peel off integer parts.
  while (p != 0) {
    digits.push_back(q / p);
    const Int rem = q % p;
    q = p;
    p = rem;
  }
  return digits;
}

Rational parse_rational(std::string_view text) {
  auto num = [&](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(Errc::BadRatio, "not a rational: '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(num(text));
  const Int d = num(text.substr(slash + 1));
  if (d == 0) throw Error(Errc::BadRatio, "zero denominator in '" + std::string(text) + "'");
  return Rational(num(text.substr(0, slash)), d);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ConePoint parse_cone_point(std::string_view text) {
  while (!text.empty() && (text.front() == '(' || std::isspace(static_cast<unsigned char>(text.front()))))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ')' || std::isspace(static_cast<unsigned char>(text.back()))))
    text.remove_suffix(1);
  std::vector<Rational> coords;
  for (;;) {
    const auto comma = text.find(',');
    coords.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ConePoint(std::move(coords));
}

std::string to_string(const ConePoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords().size(); ++i) s += (i ? ", " : "") + to_string(x.coords()[i]);
  return s + ")";
}

}  // namespace tripart
