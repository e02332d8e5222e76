#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tripart/core.hpp"
#include "tripart/dsl.hpp"

namespace tripart {

/*
 * A named or anonymous set of partitions, backed by a DSL tree. Immutable;
 * copies share the tree.
 */
class SetPredicate {
 public:
  explicit SetPredicate(dsl::NodePtr root, std::string name = {});

  bool contains(PartitionView p) const { return dsl::evaluate(*root_, p); }
  bool contains(const Partition& p) const { return contains(p.view()); }

  const dsl::NodePtr& root() const noexcept { return root_; }
  std::string to_dsl() const { return dsl::format(root_); }
  /// Registry name, or the DSL text for anonymous predicates.
  std::string name() const { return name_.empty() ? to_dsl() : name_; }

  SetPredicate named(std::string name) const { return SetPredicate(root_, std::move(name)); }

 private:
  dsl::NodePtr root_;
  std::string name_;
};

SetPredicate operator&(const SetPredicate& a, const SetPredicate& b);
SetPredicate operator|(const SetPredicate& a, const SetPredicate& b);
SetPredicate operator~(const SetPredicate& a);

SetPredicate parse_predicate(std::string_view text);
inline bool member(const SetPredicate& pred, const Partition& p) { return pred.contains(p); }

/*
 * Registry row. Entries with both dim2 and dim3 dispatch on the dimension:
 * dim2 applies at m = 2 and dim3 at m >= 3; neither matches m = 1. Entries
 * with `all` use one expression everywhere. Parameterized rows carry
 * placeholders {d}, {d+1}, {p}, {d-p}, {d-p+1}.
 */
struct RegistryEntry {
  std::string name;
  std::string label;
  std::string dim2;
  std::string dim3;
  std::string all;
  std::string note;
  std::vector<std::string> params;
};

const std::vector<RegistryEntry>& registry();

/// "Delta01", "GaussG(2)", "GaussT1(3,1)". Throws UnknownSet.
SetPredicate builtin(std::string_view name);

/// Dynamic cylinder for a word over {0,1}. Throws EmptyWord.
SetPredicate cylinder(const std::vector<int>& word);

/// A registry name (possibly with arguments) or else a DSL expression, in
/// which registry names may appear as atoms.
SetPredicate resolve_set(std::string_view name_or_dsl);

/// The DSL text a registry row expands to, after parameter substitution.
std::string registry_expression(const RegistryEntry& e, const std::vector<Int>& args = {});

nlohmann::json registry_json();

}  // namespace tripart
