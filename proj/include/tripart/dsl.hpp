#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tripart/core.hpp"

/*
 * A small language for naming sets of partitions.
 *
 *   expr       := and_expr ('or' and_expr)*
 *   and_expr   := unary ('and' unary)*
 *   unary      := 'not' unary
 *               | ('forall' | 'exists') VAR ':' unary
 *               | primary
 *   primary    := '(' expr ')' | 'true' | 'false'
 *               | ('odd' | 'even') '(' symbol ')'
 *               | 'cyl' '(' word ')'
 *               | linear cmp linear
 *   linear     := ['-'] term (('+' | '-') term)*
 *   term       := INT ['*'] symbol | INT | symbol
 *   symbol     := L<idx> | K<idx> | 'dim' | VAR
 *   idx        := INT | 'first' | 'last' | 'secondlast' | '[' (INT | VAR | 'last' ...) ']'
 *   cmp        := '<' | '<=' | '=' | '>=' | '>'
 *
 * L is a part and K a multiplicity, both one-based. Quantified variables range
 * over 1..dim. An atom that mentions an index outside 1..dim is false.
 */
namespace tripart::dsl {

enum class IndexKind { Fixed, Last, SecondLast, Variable };

struct Index {
  IndexKind kind = IndexKind::Fixed;
  int fixed = 1;
  std::string var;

  friend bool operator==(const Index&, const Index&) = default;
};

enum class SymbolKind { Part, Mult, Dim, Variable };

struct Symbol {
  SymbolKind kind = SymbolKind::Dim;
  Index index;
  std::string var;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// coef * symbol, or a bare constant when symbol is empty.
struct Term {
  Int coef = 1;
  std::optional<Symbol> symbol;

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearExpr {
  std::vector<Term> terms;

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;
};

enum class Cmp { Lt, Le, Eq, Ge, Gt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
  bool value = true;
};
struct Compare {
  LinearExpr lhs;
  Cmp op = Cmp::Eq;
  LinearExpr rhs;
};
struct Parity {
  bool odd = true;
  Symbol symbol;
};
struct Quantified {
  bool forall = true;
  std::string var;
  NodePtr body;
};
/// Dynamic cylinder: follow the branch word under iterated T.
struct Cylinder {
  std::vector<int> word;
};
struct Not {
  NodePtr operand;
};
struct And {
  std::vector<NodePtr> operands;
};
struct Or {
  std::vector<NodePtr> operands;
};

struct Node {
  std::variant<Constant, Compare, Parity, Quantified, Cylinder, Not, And, Or> value;
};

template <class T>
NodePtr make(T node) {
  return std::make_shared<const Node>(Node{std::move(node)});
}

/// Throws Error(SyntaxError) with a byte position, or Error(UnknownSymbol).
NodePtr parse(std::string_view text);

/*
 * Looks up a named set used as an atom, e.g. "D" or "GaussG(2)". Returns null
 * for names it does not know, which then parse as symbols.
 */
using SetResolver = std::function<NodePtr(const std::string& name, const std::vector<Int>& args)>;
NodePtr parse(std::string_view text, const SetResolver& resolver);

/// Canonical text; parse(format(x)) is structurally equal to x.
std::string format(const NodePtr& node);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

bool evaluate(const Node& node, PartitionView p);

}  // namespace tripart::dsl
