#include "tripart/qseries.hpp"

#include <algorithm>
#include <map>

namespace tripart {

SeriesCoeffs::SeriesCoeffs(int N) : N_(N), c_(static_cast<std::size_t>(std::max(N, 0)) + 1, 0) {
  if (N < 0) throw Error(Errc::NZero, "series order must be non-negative");
}

SeriesCoeffs::SeriesCoeffs(int N, std::vector<Int> c) : SeriesCoeffs(N) {
  for (std::size_t i = 0; i < c.size() && i < c_.size(); ++i) c_[i] = c[i];
}

void SeriesCoeffs::add_shifted(const SeriesCoeffs& other, int shift, Int scale) {
  for (int i = 0; i + shift <= N_ && i <= other.N_; ++i) {
    if (i + shift < 0) continue;
    const Int x = other.c_[static_cast<std::size_t>(i)];
    if (x != 0) at(i + shift) = checked_add(c_[static_cast<std::size_t>(i + shift)], checked_mul(scale, x));
  }
}

SeriesCoeffs& SeriesCoeffs::operator+=(const SeriesCoeffs& o) {
  add_shifted(o, 0, 1);
  return *this;
}

SeriesCoeffs& SeriesCoeffs::operator-=(const SeriesCoeffs& o) {
  add_shifted(o, 0, -1);
  return *this;
}

SeriesCoeffs operator*(const SeriesCoeffs& a, const SeriesCoeffs& b) {
  SeriesCoeffs out(std::min(a.N_, b.N_));
  for (int i = 0; i <= out.N_; ++i) {
    if (a[i] == 0) continue;
    out.add_shifted(b, i, a[i]);
  }
  return out;
}

std::optional<int> first_difference(const SeriesCoeffs& a, const SeriesCoeffs& b, int from) {
  for (int n = std::max(from, 0); n <= std::min(a.order(), b.order()); ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

namespace {

void times_one_plus(SeriesCoeffs& s, Int e) {
  for (Int i = s.order(); i >= e; --i) s.at(static_cast<int>(i)) = checked_add(s[static_cast<int>(i)], s[static_cast<int>(i - e)]);
}

void times_inverse_one_minus(SeriesCoeffs& s, Int e) {
  for (Int i = e; i <= s.order(); ++i) s.at(static_cast<int>(i)) = checked_add(s[static_cast<int>(i)], s[static_cast<int>(i - e)]);
}

// Multiplies by q^e/(1 - q^e) = q^e + q^2e + ...
void times_geometric(SeriesCoeffs& s, Int e) {
  SeriesCoeffs out(s.order());
  for (Int i = e; i <= s.order(); ++i)
    out.at(static_cast<int>(i)) = checked_add(s[static_cast<int>(i - e)], out[static_cast<int>(i - e)]);
  s = std::move(out);
}

SeriesCoeffs one(int N) {
  SeriesCoeffs s(N);
  s.at(0) = 1;
  return s;
}

}  // namespace

SeriesCoeffs expand_partition_gf(int N) {
  SeriesCoeffs s = one(N);
  for (int m = 1; m <= N; ++m) times_inverse_one_minus(s, m);
  return s;
}

SeriesCoeffs expand_product(const std::vector<ProductFactor>& factors, int N) {
  SeriesCoeffs s = one(N);
  for (const auto& f : factors) {
    if (f.first < 1 || f.step < 1) throw Error(Errc::NonPositiveEntry, "product exponents must increase from 1");
    Int used = 0;
    for (Int e = f.first; e <= N && (!f.count || used < *f.count); e += f.step, ++used) {
      if (f.kind == ProductFactor::Kind::OnePlus) times_one_plus(s, e);
      else times_inverse_one_minus(s, e);
    }
  }
  return s;
}

SeriesCoeffs divisor_series(int N) {
  SeriesCoeffs s(N);
  for (int m = 1; m <= N; ++m)
    for (int j = m; j <= N; j += m) ++s.at(j);
  return s;
}

SeriesCoeffs arithmetic_progression_series(int first, int step, int N) {
  SeriesCoeffs s(N);
  for (int e = first; e <= N; e += step) ++s.at(e);
  return s;
}

SeriesCoeffs odd_dimension_one_series(int N) {
  SeriesCoeffs s(N);
  for (int m = 1; m <= N; m += 2)
    for (int j = m; j <= N; j += m) ++s.at(j);
  return s;
}

std::vector<SeriesCoeffs> set_series_many(const std::vector<SetPredicate>& preds, int N, const VerifyOptions& options) {
  std::vector<CountColumn> cols;
  for (const auto& p : preds) cols.push_back(CountColumn::of(p));
  const auto report = run_counts("series", cols, {}, 1, N, options);
  std::vector<SeriesCoeffs> out(preds.size(), SeriesCoeffs(N));
  for (int n = 1; n <= N; ++n)
    for (std::size_t c = 0; c < preds.size(); ++c) out[c].at(n) = report.count(n, c);
  return out;
}

SeriesCoeffs set_series(const SetPredicate& pred, int N, const VerifyOptions& options) {
  return set_series_many({pred}, N, options).front();
}

SeriesCoeffs expand_E_series(ESeries which, int N) {
  SeriesCoeffs out(N);
  switch (which) {
    case ESeries::E0: {
      // sum_{m>=2} q^{2m} ((1+q)...(1+q^{m-1}) - 1)
      SeriesCoeffs prod = one(N);
      for (int m = 2; 2 * m <= N; ++m) {
        times_one_plus(prod, m - 1);
        out.add_shifted(prod - one(N), 2 * m);
      }
      break;
    }
    case ESeries::E1: {
      // sum_{k>=1} q^{2k} (prod_{j>k} (1+q^j) - 1)
      std::vector<SeriesCoeffs> suffix(static_cast<std::size_t>(N) + 2, one(N));
      for (int k = N; k >= 1; --k) {
        suffix[static_cast<std::size_t>(k - 1)] = suffix[static_cast<std::size_t>(k)];
        times_one_plus(suffix[static_cast<std::size_t>(k - 1)], k);
      }
      for (int k = 1; 2 * k <= N; ++k) out.add_shifted(suffix[static_cast<std::size_t>(k)] - one(N), 2 * k);
      break;
    }
    case ESeries::ED: {
      // sum_{a<b} q^{2a+2b} prod_{a<j<b} (1+q^j)
      for (int a = 1; 2 * a + 2 * (a + 1) <= N; ++a) {
        SeriesCoeffs prod = one(N);
        for (int b = a + 1; 2 * a + 2 * b <= N; ++b) {
          if (b > a + 1) times_one_plus(prod, b - 1);
          out.add_shifted(prod, 2 * a + 2 * b);
        }
      }
      break;
    }
  }
  return out;
}

namespace {

class TupleWalker {
 public:
  TupleWalker(const PartsRule& parts_ok, const MultRule& mult_ok, int N, int dim_min, int dim_max)
      : parts_ok_(parts_ok), mult_ok_(mult_ok), N_(N), dim_min_(dim_min), dim_max_(dim_max), out_(N) {}

  SeriesCoeffs run() {
    prefix_.push_back(one(N_));
    for (Int l1 = N_; l1 >= 1; --l1) {
      tuple_.push_back(l1);
      visit(l1);
      tuple_.pop_back();
    }
    return out_;
  }

 private:
  // prefix_[j] is the product of q^l/(1-q^l) over tuple_[1..j].
  void visit(Int sum) {
    const int m = static_cast<int>(tuple_.size());
    if (m >= dim_min_ && m <= dim_max_ && (!parts_ok_ || parts_ok_(tuple_))) leaf();
    if (m >= dim_max_) return;
    for (Int next = std::min(tuple_.back() - 1, N_ - sum); next >= 1; --next) {
      tuple_.push_back(next);
      SeriesCoeffs p = prefix_.back();
      times_geometric(p, next);
      prefix_.push_back(std::move(p));
      visit(sum + next);
      prefix_.pop_back();
      tuple_.pop_back();
    }
  }

  void leaf() {
    const int m = static_cast<int>(tuple_.size());
    const Int l1 = tuple_.front();
    if (!mult_ok_) {
      // k1 explicit, everything else free.
      for (Int k1 = 1; k1 * l1 <= N_; ++k1) out_.add_shifted(prefix_[static_cast<std::size_t>(m - 1)], static_cast<int>(k1 * l1));
      return;
    }
    if (m == 1) {
      for (Int k = 1; k * l1 <= N_; ++k)
        if (mult_ok_(1, k, k, k)) ++out_.at(static_cast<int>(k * l1));
      return;
    }
    const Int lm = tuple_.back();
    if (m == 2) {
      for (Int k1 = 1; k1 * l1 + lm <= N_; ++k1)
        for (Int km = 1; k1 * l1 + km * lm <= N_; ++km)
          if (mult_ok_(2, k1, k1, km)) ++out_.at(static_cast<int>(k1 * l1 + km * lm));
      return;
    }
    const Int lp = tuple_[static_cast<std::size_t>(m - 2)];
    const SeriesCoeffs& mid = prefix_[static_cast<std::size_t>(m - 3)];
    for (Int k1 = 1; k1 * l1 + lp + lm <= N_; ++k1)
      for (Int kp = 1; k1 * l1 + kp * lp + lm <= N_; ++kp)
        for (Int km = 1; k1 * l1 + kp * lp + km * lm <= N_; ++km)
          if (mult_ok_(m, k1, kp, km)) out_.add_shifted(mid, static_cast<int>(k1 * l1 + kp * lp + km * lm));
  }

  const PartsRule& parts_ok_;
  const MultRule& mult_ok_;
  Int N_;
  int dim_min_;
  int dim_max_;
  SeriesCoeffs out_;
  std::vector<Int> tuple_;
  std::vector<SeriesCoeffs> prefix_;
};

}  // namespace

SeriesCoeffs tuple_series(const PartsRule& parts_ok, const MultRule& mult_ok, int N, int dim_min, int dim_max) {
  return TupleWalker(parts_ok, mult_ok, N, std::max(dim_min, 1), dim_max).run();
}

SeriesCoeffs dimension_series(int dim, int N) { return tuple_series({}, {}, N, dim, dim); }

namespace {

using Parts = std::span<const Int>;

// Part conditions written straight from the tuple-sum displays. m = 2 uses
// 2*l2 in place of l2 + lm.
bool cone0(Parts l) { return l[0] < l[1] + l.back(); }
bool cone1(Parts l) { return l[0] > l[1] + l.back(); }
bool coneD(Parts l) { return l[0] == l[1] + l.back(); }

bool delta00(Parts l) {
  if (l.size() == 2) return l[0] < 2 * l[1] && 3 * l[1] < 2 * l[0];
  return cone0(l) && 2 * l[1] < l[0] + l[2];
}
bool delta01(Parts l) {
  if (l.size() == 2) return l[0] < 2 * l[1] && 3 * l[1] > 2 * l[0];
  return cone0(l) && 2 * l[1] > l[0] + l[2];
}
bool delta10(Parts l) {
  if (l.size() == 2) return 3 * l[1] > l[0] && l[0] > 2 * l[1];
  return cone1(l) && l[0] < l[1] + 2 * l.back();
}
bool delta11(Parts l) {
  if (l.size() == 2) return l[0] > 3 * l[1];
  return l[0] > l[1] + 2 * l.back();
}

bool all_odd(Parts l, std::size_t skip) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (i != skip && l[i] % 2 == 0) return false;
  return true;
}

bool k1_gt_km(int, Int k1, Int, Int km) { return k1 > km; }
bool k1_lt_km(int, Int k1, Int, Int km) { return k1 < km; }

SeriesCoeffs tuples(bool (*parts)(Parts), int N) { return tuple_series(parts, {}, N); }
SeriesCoeffs tuples(bool (*parts)(Parts), bool (*mults)(int, Int, Int, Int), int N) {
  return tuple_series(parts, mults, N);
}

}  // namespace

const std::vector<std::string>& closed_form_names() {
  static const std::vector<std::string> names = {"partitions", "distinct-product", "odd-product", "divisors",
                                                 "odd-dim1",   "E0-closed",        "E1-closed",   "ED-closed"};
  return names;
}

SeriesCoeffs named_series(const std::string& name, int N, const VerifyOptions& options) {
  if (name == "partitions") return expand_partition_gf(N);
  if (name == "distinct-product") return distinct_parts_product(N);
  if (name == "odd-product") return odd_parts_product(N);
  if (name == "divisors") return divisor_series(N);
  if (name == "odd-dim1") return odd_dimension_one_series(N);
  if (name == "E0-closed") return expand_E_series(ESeries::E0, N);
  if (name == "E1-closed") return expand_E_series(ESeries::E1, N);
  if (name == "ED-closed") return expand_E_series(ESeries::ED, N);
  if (N < 1) throw Error(Errc::NZero, "enumerated series need N >= 1");
  return set_series(resolve_set(name), N, options);
}

std::vector<SeriesCheck> series_cross_checks(int N, int Nc, const VerifyOptions& options) {
  std::vector<SeriesCheck> out;
  auto check = [&](std::string name, const SeriesCoeffs& a, const SeriesCoeffs& b, int from) {
    SeriesCheck c{std::move(name), from, std::min(a.order(), b.order()), true, std::nullopt, {}};
    c.first_difference = first_difference(a, b, from);
    if (c.first_difference) {
      c.pass = false;
      const int n = *c.first_difference;
      c.detail = "n=" + std::to_string(n) + ": " + std::to_string(a[n]) + " vs " + std::to_string(b[n]);
    }
    out.push_back(std::move(c));
  };

  const std::vector<std::string> names = {"P",  "D",  "O",      "P1",     "Delta0", "Delta1", "DeltaD", "M0",
                                          "M1", "E0", "E1",     "ED",     "F0",     "F1"};
  std::vector<SetPredicate> preds;
  for (const auto& n : names) preds.push_back(builtin(n));
  preds.push_back(parse_predicate("dim = 2"));
  preds.push_back(parse_predicate("dim = 3"));
  const auto sets = set_series_many(preds, N, options);
  std::map<std::string, SeriesCoeffs> e;
  for (std::size_t i = 0; i < names.size(); ++i) e.emplace(names[i], sets[i]);

  check("partition product = enumeration", expand_partition_gf(N), e.at("P"), 1);
  {
    SeriesCoeffs pent(N);
    for (int n = 1; n <= N; ++n) pent.at(n) = count_partitions(n);
    check("partition product = pentagonal recurrence", expand_partition_gf(N), pent, 1);
  }
  check("distinct product = enumeration", distinct_parts_product(N), e.at("D"), 1);
  check("odd product = enumeration", odd_parts_product(N), e.at("O"), 1);
  check("distinct product = odd product", distinct_parts_product(N), odd_parts_product(N), 0);
  check("divisor series = dimension one", divisor_series(N), e.at("P1"), 1);
  check("dimension-1 tuple sum = divisor series", dimension_series(1, N), divisor_series(N), 1);
  check("dimension-2 tuple sum = enumeration", dimension_series(2, N), sets[names.size()], 1);
  check("dimension-3 tuple sum = enumeration", dimension_series(3, N), sets[names.size() + 1], 1);
  check("Delta0 + Delta1 + DeltaD + dim 1 = all", e.at("Delta0") + e.at("Delta1") + e.at("DeltaD") + e.at("P1"),
        e.at("P"), 1);

  check("Delta0 tuple sum = enumeration", tuples(cone0, N), e.at("Delta0"), 1);
  check("Delta1 tuple sum = enumeration", tuples(cone1, N), e.at("Delta1"), 1);
  check("DeltaD tuple sum = enumeration", tuples(coneD, N), e.at("DeltaD"), 1);
  check("M0 tuple sum = enumeration", tuples(nullptr, k1_gt_km, N), e.at("M0"), 1);
  check("M1 tuple sum = enumeration", tuples(nullptr, k1_lt_km, N), e.at("M1"), 1);
  check("Delta0 = M0", e.at("Delta0"), e.at("M0"), 1);
  check("Delta1 = M1", e.at("Delta1"), e.at("M1"), 1);

  const auto e0 = expand_E_series(ESeries::E0, N), e1 = expand_E_series(ESeries::E1, N),
             ed = expand_E_series(ESeries::ED, N);
  check("E0 closed form = enumeration", e0, e.at("E0"), 1);
  check("E1 closed form = enumeration", e1, e.at("E1"), 1);
  check("ED closed form = enumeration", ed, e.at("ED"), 1);
  check("distinct product = sum q^n + E0 + E1 + ED + sum q^3k", distinct_parts_product(N),
        arithmetic_progression_series(0, 1, N) + e0 + e1 + ed + arithmetic_progression_series(3, 3, N), 0);

  const auto f0 = tuple_series([](Parts l) { return l.back() % 2 == 0 && all_odd(l, l.size() - 1); }, k1_gt_km, N);
  const auto f1 = tuple_series([](Parts l) { return l[0] % 2 == 0 && all_odd(l, 0); }, k1_lt_km, N);
  check("F0 tuple sum = enumeration", f0, e.at("F0"), 1);
  check("F1 tuple sum = enumeration", f1, e.at("F1"), 1);
  check("odd product = odd dimension one + F0 + F1", odd_parts_product(N), odd_dimension_one_series(N) + f0 + f1, 1);

  // Cylinder sets and their images.
  struct Cyl {
    std::string word;
    bool (*base)(Parts);
    bool (*one_parts)(Parts);
    bool (*one_mults)(int, Int, Int, Int);
    bool (*two_mults)(int, Int, Int, Int);
  };
  const std::vector<Cyl> cyls = {
      {"00", delta00, cone0, k1_gt_km,
       [](int m, Int k1, Int kp, Int km) { return m == 2 ? km < k1 && k1 < 2 * km : kp < km && km < k1; }},
      {"01", delta01, cone1, k1_gt_km, [](int, Int k1, Int, Int km) { return k1 < km && km < 2 * k1; }},
      {"10", delta10, cone0, k1_lt_km,
       [](int m, Int k1, Int kp, Int km) { return m == 2 ? 2 * km < k1 : km < k1 && km < kp; }},
      {"11", delta11, cone1, k1_lt_km, [](int, Int k1, Int, Int km) { return 2 * k1 < km; }},
  };
  const std::map<std::string, std::pair<std::string, std::string>> image_names = {
      {"00", {"T0Delta00", "T0T0Delta00"}},
      {"01", {"T0Delta01", "T1T0Delta01"}},
      {"10", {"T1Delta10", "T0T1Delta10"}},
      {"11", {"T1Delta11", "T1T1Delta11"}}};
  std::vector<SetPredicate> cyl_preds;
  for (const auto& c : cyls) {
    cyl_preds.push_back(builtin("Delta" + c.word));
    cyl_preds.push_back(builtin(image_names.at(c.word).first));
    cyl_preds.push_back(builtin(image_names.at(c.word).second));
  }
  const auto cyl_sets = set_series_many(cyl_preds, Nc, options);
  for (std::size_t i = 0; i < cyls.size(); ++i) {
    const auto& c = cyls[i];
    const auto base = tuples(c.base, Nc);
    const auto one_step = tuples(c.one_parts, c.one_mults, Nc);
    const auto two_step = tuples(nullptr, c.two_mults, Nc);
    const auto& names_i = image_names.at(c.word);
    check("Delta" + c.word + " tuple sum = enumeration", base, cyl_sets[3 * i], 1);
    check(names_i.first + " tuple sum = enumeration", one_step, cyl_sets[3 * i + 1], 1);
    check(names_i.second + " tuple sum = enumeration", two_step, cyl_sets[3 * i + 2], 1);
    check("Delta" + c.word + " = " + names_i.first, base, one_step, 0);
    check("Delta" + c.word + " = " + names_i.second, base, two_step, 0);
  }
  return out;
}

}  // namespace tripart
