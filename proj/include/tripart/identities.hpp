#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tripart/core.hpp"
#include "tripart/enumerate.hpp"
#include "tripart/sets.hpp"

namespace tripart {

/// A column is either a set (counted by enumeration) or an arithmetic term in n.
struct CountColumn {
  std::string name;
  std::optional<SetPredicate> pred;
  std::function<Int(int)> arith;

  static CountColumn of(const SetPredicate& p) { return {p.name(), p, {}}; }
  static CountColumn of(std::string name, SetPredicate p) { return {std::move(name), std::move(p), {}}; }
  static CountColumn term(std::string name, std::function<Int(int)> f) {
    return {std::move(name), std::nullopt, std::move(f)};
  }
};

/*
 * Sum: sum of lhs columns equals sum of rhs columns for every n.
 * SameSet: the two predicate columns select the same partitions (checked
 * member by member, not just by count).
 */
struct Claim {
  enum class Kind { Sum, SameSet };
  Kind kind = Kind::Sum;
  std::string text;
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
  bool asserted = true;
};

struct Verdict {
  std::string claim;
  bool asserted = true;
  bool pass = true;
  std::optional<int> counterexample;
  std::string detail;
  // Set-valued claims only: members of one side but not the other at the
  // counterexample.
  std::vector<Partition> only_left;
  std::vector<Partition> only_right;
};

struct CountReport {
  std::string title;
  int n_min = 1;
  int n_max = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<Int>> counts;  // counts[n - n_min][column]
  std::vector<Verdict> verdicts;

  /// All asserted verdicts hold.
  bool passed() const;
  Int count(int n, std::size_t column) const { return counts.at(static_cast<std::size_t>(n - n_min)).at(column); }
};

struct CertPair {
  Partition source;
  Partition image;
};

struct BijectionCertificate {
  int n = 0;
  std::string domain_name;
  std::string codomain_name;
  std::string route;  // letters 0, 1, D applied left to right
  std::vector<CertPair> pairs;
};

struct VerifyOptions {
  EnumerateOptions enumerate;
  unsigned threads = 0;  // 0: hardware concurrency
};

Int count_set(const SetPredicate& pred, int n, const EnumerateOptions& options = {});

Int odd_divisor_count(Int n);
Int divisor_count(Int n);

/// Counts every column for n_min..n_max (one enumeration per n) and judges the claims.
CountReport run_counts(std::string title, const std::vector<CountColumn>& columns,
                       const std::vector<Claim>& claims, int n_min, int n_max,
                       const VerifyOptions& options = {});

/// Throws BranchMismatch, NotInjective, NotOnto or ImageOutsideCodomain.
BijectionCertificate certify_bijection(const SetPredicate& domain, const SetPredicate& codomain,
                                       const std::string& route, int n,
                                       const EnumerateOptions& options = {});

/// certify_bijection for every n in range, folded into one verdict.
Verdict certify_range(const SetPredicate& domain, const SetPredicate& codomain,
                      const std::string& route, int n_min, int n_max, bool asserted = true,
                      const VerifyOptions& options = {});

CountReport verify_equicount(const SetPredicate& a, const SetPredicate& b, int n_max,
                             const VerifyOptions& options = {});
CountReport verify_delta_m(int n_max, const VerifyOptions& options = {});
CountReport verify_offset_theorem(int d, int n_max, const VerifyOptions& options = {});
/// steps: 1 for one-step images, 2 for two-step images, 0 for both.
CountReport verify_cylinder_theorems(int n_max, int steps = 0, const VerifyOptions& options = {});
CountReport verify_gauss_theorem(int d, int n_max, const VerifyOptions& options = {});
CountReport verify_distinct_theorem(int n_max, const VerifyOptions& options = {});
CountReport verify_odd_theorem(int n_max, const VerifyOptions& options = {});
CountReport verify_euler_chain(int n_max, const VerifyOptions& options = {});

/// Theorem names accepted by the CLI.
const std::vector<std::string>& theorem_names();
/// Dispatches by name; `d` is used by offset and gauss. Throws UnknownSet.
CountReport verify_theorem(const std::string& name, int n_max, int d, const VerifyOptions& options = {});

}  // namespace tripart
