#include "tripart/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "tripart/trimap.hpp"

namespace tripart::dsl {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Number,
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Plus,
  Minus,
  Star,
  Colon,
  Comma,
  Less,
  LessEq,
  Equal,
  GreaterEq,
  Greater,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const std::vector<std::string_view> kKeywords = {"and", "or",   "not",   "forall", "exists", "odd",
                                                 "even", "true", "false", "cyl",    "dim"};

bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(text.substr(i, len)), i});
    i += len;
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Number, j - i);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    const std::string_view rest = text.substr(i);
    if (rest.starts_with("<=")) push(Tok::LessEq, 2);
    else if (rest.starts_with(">=")) push(Tok::GreaterEq, 2);
    else if (rest.starts_with("==")) push(Tok::Equal, 2);
    else if (rest.starts_with("≤")) push(Tok::LessEq, std::string_view("≤").size());
    else if (rest.starts_with("≥")) push(Tok::GreaterEq, std::string_view("≥").size());
    else {
      switch (c) {
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case '[': push(Tok::LBracket, 1); break;
        case ']': push(Tok::RBracket, 1); break;
        case '+': push(Tok::Plus, 1); break;
        case '-': push(Tok::Minus, 1); break;
        case '*': push(Tok::Star, 1); break;
        case ':': push(Tok::Colon, 1); break;
        case ',': push(Tok::Comma, 1); break;
        case '<': push(Tok::Less, 1); break;
        case '>': push(Tok::Greater, 1); break;
        case '=': push(Tok::Equal, 1); break;
        default:
          throw Error(Errc::SyntaxError, "unexpected character '" + std::string(1, text[i]) + "'", i);
      }
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::string_view text, const SetResolver* resolver) : tokens_(lex(text)), resolver_(resolver) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at_ident(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, std::string_view what) {
    if (!accept(k)) fail("expected " + std::string(what));
  }
  [[noreturn]] void fail(const std::string& why) const {
    const Token& t = peek();
    throw Error(Errc::SyntaxError, t.kind == Tok::End ? why + " at end of input" : why, t.pos);
  }

  NodePtr expr() {
    std::vector<NodePtr> ops{and_expr()};
    while (at_ident("or")) {
      ++pos_;
      ops.push_back(and_expr());
    }
    return ops.size() == 1 ? ops.front() : make(Or{std::move(ops)});
  }

  NodePtr and_expr() {
    std::vector<NodePtr> ops{unary()};
    while (at_ident("and")) {
      ++pos_;
      ops.push_back(unary());
    }
    return ops.size() == 1 ? ops.front() : make(And{std::move(ops)});
  }

  NodePtr unary() {
    if (at_ident("not")) {
      ++pos_;
      return make(Not{unary()});
    }
    if (at_ident("forall") || at_ident("exists")) {
      const bool forall = next().text == "forall";
      const Token& v = peek();
      if (v.kind != Tok::Ident || is_keyword(v.text) || v.text.empty() ||
          !std::islower(static_cast<unsigned char>(v.text[0])))
        fail("expected a lowercase variable name after quantifier");
      std::string var = next().text;
      expect(Tok::Colon, "':'");
      scope_.push_back(var);
      NodePtr body = unary();
      scope_.pop_back();
      return make(Quantified{forall, std::move(var), std::move(body)});
    }
    return primary();
  }

  NodePtr primary() {
    if (accept(Tok::LParen)) {
      NodePtr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at_ident("true") || at_ident("false")) return make(Constant{next().text == "true"});
    if (at_ident("odd") || at_ident("even")) {
      const bool odd = next().text == "odd";
      expect(Tok::LParen, "'('");
      Symbol s = symbol();
      expect(Tok::RParen, "')'");
      return make(Parity{odd, std::move(s)});
    }
    if (NodePtr ref = set_reference()) return ref;
    if (at_ident("cyl")) {
      ++pos_;
      expect(Tok::LParen, "'('");
      std::vector<int> word;
      do {
        const Token& t = peek();
        if (t.kind != Tok::Number) fail("expected a branch word of 0s and 1s");
        for (char ch : t.text) {
          if (ch != '0' && ch != '1') fail("branch words use only 0 and 1");
          word.push_back(ch - '0');
        }
        ++pos_;
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
      return make(Cylinder{std::move(word)});
    }
    LinearExpr lhs = linear();
    Cmp op;
    switch (peek().kind) {
      case Tok::Less: op = Cmp::Lt; break;
      case Tok::LessEq: op = Cmp::Le; break;
      case Tok::Equal: op = Cmp::Eq; break;
      case Tok::GreaterEq: op = Cmp::Ge; break;
      case Tok::Greater: op = Cmp::Gt; break;
      default: fail("expected a comparison operator");
    }
    ++pos_;
    LinearExpr rhs = linear();
    return make(Compare{std::move(lhs), op, std::move(rhs)});
  }

  // NAME or NAME(int, ...) when the resolver knows NAME.
  NodePtr set_reference() {
    const Token& t = peek();
    if (!resolver_ || t.kind != Tok::Ident || is_keyword(t.text) || t.text == "dim" || in_scope(t.text))
      return nullptr;
    std::size_t ahead = 1;
    std::vector<Int> args;
    if (peek(1).kind == Tok::LParen) {
      ahead = 2;
      while (peek(ahead).kind == Tok::Number) {
        const std::string& s = peek(ahead).text;
        Int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) return nullptr;
        args.push_back(v);
        ++ahead;
        if (peek(ahead).kind == Tok::Comma) ++ahead;
        else break;
      }
      if (peek(ahead).kind != Tok::RParen) return nullptr;
      ++ahead;
    }
    NodePtr node = (*resolver_)(t.text, args);
    if (node) pos_ += ahead;
    return node;
  }

  LinearExpr linear() {
    LinearExpr e;
    bool negative = false;
    if (accept(Tok::Minus)) negative = true;
    else accept(Tok::Plus);
    for (;;) {
      Term t = term();
      if (negative) t.coef = checked_mul(t.coef, -1);
      e.terms.push_back(std::move(t));
      if (accept(Tok::Plus)) negative = false;
      else if (accept(Tok::Minus)) negative = true;
      else break;
    }
    return e;
  }

  bool starts_symbol() const {
    const Token& t = peek();
    return t.kind == Tok::Ident && (t.text == "dim" || !is_keyword(t.text));
  }

  Term term() {
    if (peek().kind == Tok::Number) {
      Term t{number(), std::nullopt};
      if (accept(Tok::Star)) t.symbol = symbol();
      else if (starts_symbol()) t.symbol = symbol();
      return t;
    }
    if (!starts_symbol()) fail("expected a number or a symbol");
    return Term{1, symbol()};
  }

  Int number() {
    const Token& t = next();
    Int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw Error(Errc::SyntaxError, "integer out of range", t.pos);
    return v;
  }

  bool in_scope(std::string_view v) const {
    return std::find(scope_.begin(), scope_.end(), v) != scope_.end();
  }

  Symbol symbol() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected a symbol");
    ++pos_;
    if (t.text == "dim") return Symbol{SymbolKind::Dim, {}, {}};
    if (in_scope(t.text)) return Symbol{SymbolKind::Variable, {}, t.text};
    const char head = t.text[0];
    if (head != 'L' && head != 'K')
      throw Error(Errc::UnknownSymbol, "unknown symbol '" + t.text + "'", t.pos);
    Symbol s{head == 'L' ? SymbolKind::Part : SymbolKind::Mult, {}, {}};
    std::string_view rest = std::string_view(t.text).substr(1);
    if (rest.empty()) {
      expect(Tok::LBracket, "'[' or an index after " + t.text);
      const Token& it = peek();
      if (it.kind == Tok::Number) {
        s.index = fixed_index(number(), it.pos);
      } else if (it.kind == Tok::Ident && in_scope(it.text)) {
        s.index = Index{IndexKind::Variable, 0, it.text};
        ++pos_;
      } else if (it.kind == Tok::Ident && named_index(it.text, s.index)) {
        ++pos_;
      } else if (it.kind == Tok::Ident) {
        throw Error(Errc::UnknownSymbol, "unknown index '" + it.text + "'", it.pos);
      } else {
        fail("expected an index");
      }
      expect(Tok::RBracket, "']'");
      return s;
    }
    if (std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      Int v = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
      if (ec != std::errc()) throw Error(Errc::SyntaxError, "index out of range", t.pos);
      s.index = fixed_index(v, t.pos);
      return s;
    }
    if (!named_index(rest, s.index))
      throw Error(Errc::UnknownSymbol, "unknown symbol '" + t.text + "'", t.pos);
    return s;
  }

  static bool named_index(std::string_view name, Index& out) {
    if (name == "first") out = Index{IndexKind::Fixed, 1, {}};
    else if (name == "last") out = Index{IndexKind::Last, 0, {}};
    else if (name == "secondlast" || name == "second_last") out = Index{IndexKind::SecondLast, 0, {}};
    else return false;
    return true;
  }

  static Index fixed_index(Int v, std::size_t pos) {
    if (v < 1 || v > 1'000'000) throw Error(Errc::SyntaxError, "indices start at 1", pos);
    return Index{IndexKind::Fixed, static_cast<int>(v), {}};
  }

  std::vector<Token> tokens_;
  const SetResolver* resolver_ = nullptr;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

// ---------------------------------------------------------------------------
// Formatter

int precedence(const Node& n) {
  if (std::holds_alternative<Or>(n.value)) return 1;
  if (std::holds_alternative<And>(n.value)) return 2;
  return 3;
}

void format_index(std::ostringstream& os, const Index& ix) {
  switch (ix.kind) {
    case IndexKind::Fixed: os << ix.fixed; break;
    case IndexKind::Last: os << "last"; break;
    case IndexKind::SecondLast: os << "secondlast"; break;
    case IndexKind::Variable: os << '[' << ix.var << ']'; break;
  }
}

void format_symbol(std::ostringstream& os, const Symbol& s) {
  switch (s.kind) {
    case SymbolKind::Part: os << 'L'; format_index(os, s.index); break;
    case SymbolKind::Mult: os << 'K'; format_index(os, s.index); break;
    case SymbolKind::Dim: os << "dim"; break;
    case SymbolKind::Variable: os << s.var; break;
  }
}

void format_linear(std::ostringstream& os, const LinearExpr& e) {
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    const bool neg = t.coef < 0;
    if (i == 0) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    const Int mag = neg ? -t.coef : t.coef;
    if (!t.symbol) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      format_symbol(os, *t.symbol);
    }
  }
}

const char* cmp_text(Cmp c) {
  switch (c) {
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Eq: return "=";
    case Cmp::Ge: return ">=";
    case Cmp::Gt: return ">";
  }
  return "?";
}

void format_node(std::ostringstream& os, const Node& n);

// Children at the same or lower precedence get parentheses so that the
// printed form reparses to the same tree.
void format_child(std::ostringstream& os, const Node& child, int parent_prec) {
  const bool paren = precedence(child) < 3 && precedence(child) <= parent_prec;
  if (paren) os << '(';
  format_node(os, child);
  if (paren) os << ')';
}

void format_node(std::ostringstream& os, const Node& n) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Constant>) {
          os << (v.value ? "true" : "false");
        } else if constexpr (std::is_same_v<T, Compare>) {
          format_linear(os, v.lhs);
          os << ' ' << cmp_text(v.op) << ' ';
          format_linear(os, v.rhs);
        } else if constexpr (std::is_same_v<T, Parity>) {
          os << (v.odd ? "odd(" : "even(");
          format_symbol(os, v.symbol);
          os << ')';
        } else if constexpr (std::is_same_v<T, Quantified>) {
          os << (v.forall ? "forall " : "exists ") << v.var << ": ";
          format_child(os, *v.body, 3);
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          os << "cyl(";
          for (int b : v.word) os << b;
          os << ')';
        } else if constexpr (std::is_same_v<T, Not>) {
          os << "not ";
          format_child(os, *v.operand, 3);
        } else if constexpr (std::is_same_v<T, And>) {
          for (std::size_t i = 0; i < v.operands.size(); ++i) {
            if (i) os << " and ";
            format_child(os, *v.operands[i], 2);
          }
        } else if constexpr (std::is_same_v<T, Or>) {
          for (std::size_t i = 0; i < v.operands.size(); ++i) {
            if (i) os << " or ";
            format_child(os, *v.operands[i], 1);
          }
        }
      },
      n.value);
}

// ---------------------------------------------------------------------------
// Evaluation

struct Env {
  PartitionView p;
  std::vector<std::pair<std::string_view, int>> bindings;

  std::optional<int> lookup(std::string_view var) const {
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
      if (it->first == var) return it->second;
    return std::nullopt;
  }
};

std::optional<int> resolve(const Index& ix, const Env& env) {
  const int m = env.p.dimension();
  int i = 0;
  switch (ix.kind) {
    case IndexKind::Fixed: i = ix.fixed; break;
    case IndexKind::Last: i = m; break;
    case IndexKind::SecondLast: i = m - 1; break;
    case IndexKind::Variable: {
      auto v = env.lookup(ix.var);
      if (!v) return std::nullopt;
      i = *v;
      break;
    }
  }
  if (i < 1 || i > m) return std::nullopt;
  return i;
}

std::optional<Int> value_of(const Symbol& s, const Env& env) {
  switch (s.kind) {
    case SymbolKind::Dim: return env.p.dimension();
    case SymbolKind::Variable: {
      auto v = env.lookup(s.var);
      if (!v) return std::nullopt;
      return *v;
    }
    case SymbolKind::Part:
    case SymbolKind::Mult: {
      auto i = resolve(s.index, env);
      if (!i) return std::nullopt;
      const auto& xs = s.kind == SymbolKind::Part ? env.p.parts : env.p.mults;
      return xs[static_cast<std::size_t>(*i - 1)];
    }
  }
  return std::nullopt;
}

std::optional<Int> value_of(const LinearExpr& e, const Env& env) {
  Int acc = 0;
  for (const Term& t : e.terms) {
    Int x = 1;
    if (t.symbol) {
      auto v = value_of(*t.symbol, env);
      if (!v) return std::nullopt;
      x = *v;
    }
    acc = checked_add(acc, checked_mul(t.coef, x));
  }
  return acc;
}

bool follows_word(PartitionView view, const std::vector<int>& word) {
  Partition p = to_partition(view);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto want = word[i] == 0 ? PartitionClass::Delta0 : PartitionClass::Delta1;
    if (classify(p) != want) return false;
    if (i + 1 < word.size()) p = word[i] == 0 ? apply_T0(p) : apply_T1(p);
  }
  return true;
}

bool eval(const Node& n, Env& env) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Compare>) {
          auto a = value_of(v.lhs, env);
          auto b = value_of(v.rhs, env);
          if (!a || !b) return false;
          switch (v.op) {
            case Cmp::Lt: return *a < *b;
            case Cmp::Le: return *a <= *b;
            case Cmp::Eq: return *a == *b;
            case Cmp::Ge: return *a >= *b;
            case Cmp::Gt: return *a > *b;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Parity>) {
          auto a = value_of(v.symbol, env);
          if (!a) return false;
          return ((*a % 2) != 0) == v.odd;
        } else if constexpr (std::is_same_v<T, Quantified>) {
          const int m = env.p.dimension();
          env.bindings.emplace_back(v.var, 0);
          bool result = v.forall;
          for (int i = 1; i <= m; ++i) {
            env.bindings.back().second = i;
            const bool b = eval(*v.body, env);
            if (v.forall && !b) {
              result = false;
              break;
            }
            if (!v.forall && b) {
              result = true;
              break;
            }
          }
          env.bindings.pop_back();
          return result;
        } else if constexpr (std::is_same_v<T, Cylinder>) {
          return follows_word(env.p, v.word);
        } else if constexpr (std::is_same_v<T, Not>) {
          return !eval(*v.operand, env);
        } else if constexpr (std::is_same_v<T, And>) {
          for (const auto& c : v.operands)
            if (!eval(*c, env)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Or>) {
          for (const auto& c : v.operands)
            if (eval(*c, env)) return true;
          return false;
        }
      },
      n.value);
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text, nullptr).parse_all(); }
NodePtr parse(std::string_view text, const SetResolver& resolver) { return Parser(text, &resolver).parse_all(); }

std::string format(const NodePtr& node) {
  std::ostringstream os;
  format_node(os, *node);
  return os.str();
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->value.index() != b->value.index()) return false;
  auto all_equal = [](const std::vector<NodePtr>& x, const std::vector<NodePtr>& y) {
    return x.size() == y.size() &&
           std::equal(x.begin(), x.end(), y.begin(), [](const NodePtr& l, const NodePtr& r) {
             return structurally_equal(l, r);
           });
  };
  return std::visit(
      [&](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const T& vb = std::get<T>(b->value);
        if constexpr (std::is_same_v<T, Constant>) return va.value == vb.value;
        else if constexpr (std::is_same_v<T, Compare>) return va.lhs == vb.lhs && va.op == vb.op && va.rhs == vb.rhs;
        else if constexpr (std::is_same_v<T, Parity>) return va.odd == vb.odd && va.symbol == vb.symbol;
        else if constexpr (std::is_same_v<T, Quantified>)
          return va.forall == vb.forall && va.var == vb.var && structurally_equal(va.body, vb.body);
        else if constexpr (std::is_same_v<T, Cylinder>) return va.word == vb.word;
        else if constexpr (std::is_same_v<T, Not>) return structurally_equal(va.operand, vb.operand);
        else return all_equal(va.operands, vb.operands);
      },
      a->value);
}

bool evaluate(const Node& node, PartitionView p) {
  Env env{p, {}};
  return eval(node, env);
}

}  // namespace tripart::dsl
