#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tripart/core.hpp"
#include "tripart/identities.hpp"
#include "tripart/sets.hpp"

namespace tripart {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N with exact coefficients.
class SeriesCoeffs {
 public:
  explicit SeriesCoeffs(int N = 0);
  SeriesCoeffs(int N, std::vector<Int> c);

  int order() const noexcept { return N_; }
  Int operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Int& at(int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<Int>& coeffs() const noexcept { return c_; }

  /// Adds `scale` * q^shift * other, dropping terms past N.
  void add_shifted(const SeriesCoeffs& other, int shift, Int scale = 1);

  SeriesCoeffs& operator+=(const SeriesCoeffs& o);
  SeriesCoeffs& operator-=(const SeriesCoeffs& o);
  friend SeriesCoeffs operator+(SeriesCoeffs a, const SeriesCoeffs& b) { return a += b; }
  friend SeriesCoeffs operator-(SeriesCoeffs a, const SeriesCoeffs& b) { return a -= b; }
  friend SeriesCoeffs operator*(const SeriesCoeffs& a, const SeriesCoeffs& b);
  friend bool operator==(const SeriesCoeffs&, const SeriesCoeffs&) = default;

 private:
  int N_;
  std::vector<Int> c_;
};

/// First index >= from where the two series differ (up to the smaller order).
std::optional<int> first_difference(const SeriesCoeffs& a, const SeriesCoeffs& b, int from = 0);

/// 1/(q;q)_inf, by the standard coin-change recurrence.
SeriesCoeffs expand_partition_gf(int N);

/*
 * One family of factors in an infinite product: exponents first, first+step,
 * ... (count of them, or all up to N). OnePlus contributes (1 + q^e), and
 * InverseOneMinus contributes 1/(1 - q^e).
 */
struct ProductFactor {
  enum class Kind { OnePlus, InverseOneMinus };
  Kind kind = Kind::OnePlus;
  Int first = 1;
  Int step = 1;
  std::optional<Int> count;
};

SeriesCoeffs expand_product(const std::vector<ProductFactor>& factors, int N);
inline SeriesCoeffs distinct_parts_product(int N) { return expand_product({{ProductFactor::Kind::OnePlus, 1, 1, {}}}, N); }
inline SeriesCoeffs odd_parts_product(int N) {
  return expand_product({{ProductFactor::Kind::InverseOneMinus, 1, 2, {}}}, N);
}

/// sum_{m>=1} q^m / (1 - q^m): the divisor function.
SeriesCoeffs divisor_series(int N);

/// sum_{j>=0} q^(first + j*step).
SeriesCoeffs arithmetic_progression_series(int first, int step, int N);

/// sum over odd m of q^m / (1 - q^m): odd parts of dimension one.
SeriesCoeffs odd_dimension_one_series(int N);

/// c_n = number of partitions of n in the set (c_0 = 0), by enumeration.
SeriesCoeffs set_series(const SetPredicate& pred, int N, const VerifyOptions& options = {});
/// Several sets from one enumeration pass per n.
std::vector<SeriesCoeffs> set_series_many(const std::vector<SetPredicate>& preds, int N,
                                          const VerifyOptions& options = {});

enum class ESeries { E0, E1, ED };

/// Direct summation of the closed forms for the E sets.
SeriesCoeffs expand_E_series(ESeries which, int N);

/*
 * Sum over strictly decreasing part tuples (l1 > ... > lm > 0) accepted by
 * `parts_ok`, dim_min <= m <= dim_max. Middle parts contribute
 * q^l/(1 - q^l). When `mult_ok` is set, the multiplicities k1, k(m-1), km are
 * enumerated explicitly and filtered by it (at m = 2, k(m-1) is k1; at
 * m = 1 all three are k1). Without it every multiplicity is free.
 */
using PartsRule = std::function<bool(std::span<const Int>)>;
using MultRule = std::function<bool(int m, Int k1, Int k_penultimate, Int k_last)>;

SeriesCoeffs tuple_series(const PartsRule& parts_ok, const MultRule& mult_ok, int N, int dim_min = 2,
                          int dim_max = 1 << 20);

/// sum over dimension-N tuples; the generating function of partitions of dimension exactly `dim`.
SeriesCoeffs dimension_series(int dim, int N);

/// A named closed form or, failing that, the enumerated series of a set name/DSL.
SeriesCoeffs named_series(const std::string& name, int N, const VerifyOptions& options = {});
const std::vector<std::string>& closed_form_names();

struct SeriesCheck {
  std::string name;
  int from = 0;
  int N = 0;
  bool pass = true;
  std::optional<int> first_difference;
  std::string detail;
};

/// Every cross-route identity: closed forms against enumeration, and the
/// theorem chains as series. Cylinder-related checks run to N_cylinder.
std::vector<SeriesCheck> series_cross_checks(int N, int N_cylinder, const VerifyOptions& options = {});

}  // namespace tripart
