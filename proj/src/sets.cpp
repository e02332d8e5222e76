#include "tripart/sets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace tripart {

SetPredicate::SetPredicate(dsl::NodePtr root, std::string name)
    : root_(std::move(root)), name_(std::move(name)) {}

SetPredicate operator&(const SetPredicate& a, const SetPredicate& b) {
  return SetPredicate(dsl::make(dsl::And{{a.root(), b.root()}}));
}

SetPredicate operator|(const SetPredicate& a, const SetPredicate& b) {
  return SetPredicate(dsl::make(dsl::Or{{a.root(), b.root()}}));
}

SetPredicate operator~(const SetPredicate& a) { return SetPredicate(dsl::make(dsl::Not{a.root()})); }

SetPredicate parse_predicate(std::string_view text) { return SetPredicate(dsl::parse(text)); }

namespace {

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r;
  auto split = [&](std::string name, std::string label, std::string d2, std::string d3,
                   std::string note, std::vector<std::string> params = {}) {
    r.push_back({std::move(name), std::move(label), std::move(d2), std::move(d3), {}, std::move(note),
                 std::move(params)});
  };
  auto uniform = [&](std::string name, std::string label, std::string all, std::string note,
                     std::vector<std::string> params = {}) {
    r.push_back({std::move(name), std::move(label), {}, {}, std::move(all), std::move(note),
                 std::move(params)});
  };

  uniform("P", "𝒫", "true", "all partitions");
  uniform("P1", "𝒫₁", "dim = 1", "dimension one, (m)x[k]");
  uniform("Pge2", "𝒫≥₂", "dim >= 2", "domain of T");

  split("Delta0", "Δ₀", "2*L2 > L1", "L2 + Llast > L1", "l1 < l2 + lm");
  split("Delta1", "Δ₁", "2*L2 < L1", "L2 + Llast < L1", "l1 > l2 + lm");
  split("DeltaD", "Δ_D", "2*L2 = L1", "L2 + Llast = L1", "l1 = l2 + lm");
  split("M0", "M₀", "K1 > K2", "K1 > Klast", "image of Delta0 under T0");
  split("M1", "M₁", "K1 < K2", "K1 < Klast", "image of Delta1 under T1");

  split("Delta00", "Δ₀₀", "2*L2 > L1 and 2*L1 > 3*L2", "L2 + Llast > L1 and 2*L2 < L1 + L3",
        "T0 lands in Delta0");
  split("Delta01", "Δ₀₁", "2*L2 > L1 and 2*L1 < 3*L2", "L2 + Llast > L1 and 2*L2 > L1 + L3",
        "T0 lands in Delta1");
  split("Delta10", "Δ₁₀", "2*L2 < L1 and 3*L2 > L1", "L2 + Llast < L1 and L2 + 2*Llast > L1",
        "T1 lands in Delta0");
  split("Delta11", "Δ₁₁", "3*L2 < L1", "L2 + 2*Llast < L1", "T1 lands in Delta1");

  split("T0Delta00", "T₀(Δ₀₀)", "2*L2 > L1 and K1 > K2", "L2 + Llast > L1 and K1 > Klast",
        "Delta0 and M0");
  split("T0Delta01", "T₀(Δ₀₁)", "2*L2 < L1 and K1 > K2", "L2 + Llast < L1 and K1 > Klast",
        "Delta1 and M0");
  split("T1Delta10", "T₁(Δ₁₀)", "2*L2 > L1 and K1 < K2", "L2 + Llast > L1 and K1 < Klast",
        "Delta0 and M1");
  split("T1Delta11", "T₁(Δ₁₁)", "2*L2 < L1 and K1 < K2", "L2 + Llast < L1 and K1 < Klast",
        "Delta1 and M1");

  split("T0T0Delta00", "T₀(T₀(Δ₀₀))", "2*K2 > K1 and K1 > K2", "K1 > Klast and Klast > Ksecondlast",
        "k(m-1) < km < k1; at m = 2, k2 < k1 < 2k2");
  split("T1T0Delta01", "T₁(T₀(Δ₀₁))", "2*K1 > K2 and K2 > K1", "2*K1 > Klast and Klast > K1",
        "k1 < km < 2k1");
  split("T0T1Delta10", "T₀(T₁(Δ₁₀))", "2*K2 < K1", "K1 > Klast and Ksecondlast > Klast",
        "km < k1 and km < k(m-1)");
  split("T1T1Delta11", "T₁(T₁(Δ₁₁))", "2*K1 < K2", "Klast > 2*K1", "2k1 < km");

  uniform("D", "𝒟", "forall i: K[i] = 1", "distinct parts");
  split("E0", "ℰ₀", "K1 = 2 and K2 = 1", "K1 = 2 and forall i: (i = 1 or K[i] = 1)",
        "k1 = 2, other ki = 1; image of D and Delta0");
  split("E1", "ℰ₁", "K1 = 1 and K2 = 2", "Klast = 2 and forall i: (i = dim or K[i] = 1)",
        "km = 2, other ki = 1; image of D and Delta1");
  split("ED", "ℰ_D", "K1 = 2 and K2 = 2",
        "K1 = 2 and Klast = 2 and forall i: (i = 1 or i = dim or K[i] = 1)",
        "k1 = km = 2, other ki = 1; image of D and DeltaD, dim >= 3");

  uniform("O", "𝒪", "forall i: odd(L[i])", "odd parts");
  split("F0", "ℱ₀", "odd(L1) and even(L2) and K1 > K2",
        "even(Llast) and forall i: (i = dim or odd(L[i])) and K1 > Klast",
        "lm even, other parts odd, k1 > km");
  split("F1", "ℱ₁", "even(L1) and odd(L2) and K1 < K2",
        "even(L1) and forall i: (i = 1 or odd(L[i])) and K1 < Klast",
        "l1 even, other parts odd, k1 < km");

  uniform("Delta0Off", "Δ₀(d)", "dim >= 2 and L1 + {d} = L2 + Llast", "l1 + d = l2 + lm", {"d"});
  uniform("M0Off", "M₀(d)", "dim >= 2 and K1 > Klast and Lsecondlast = Llast + {d}",
          "k1 > km and l(m-1) = lm + d", {"d"});
  uniform("Delta1Off", "Δ₁(d)", "dim >= 2 and L1 = L2 + Llast + {d}", "l1 = l2 + lm + d", {"d"});
  uniform("M1Off", "M₁(d)", "dim >= 2 and K1 < Klast and L1 = L2 + {d}", "k1 < km and l1 = l2 + d",
          {"d"});

  uniform("GaussG", "Δ_d^G", "L1 - L2 - {d}*Llast > 0 and L1 - L2 - {d+1}*Llast < 0",
          "d*lm < l1 - l2 < (d+1)*lm", {"d"});
  uniform("GaussT1", "T₁^p(Δ_d^G)",
          "L1 - L2 - {d-p}*Llast > 0 and L1 - L2 - {d-p+1}*Llast < 0 and {p}*K1 < Klast",
          "GaussG(d-p) and p*k1 < km", {"d", "p"});
  split("GaussT0T1", "T₀(T₁^d(Δ_d^G))", "{d+1}*K2 < K1", "{d}*Klast < Ksecondlast and Klast < K1",
        "d*km < k(m-1) and km < k1; at m = 2, (d+1)*k2 < k1", {"d"});
  return r;
}

struct Call {
  std::string name;
  std::vector<Int> args;
  bool has_parens = false;
};

// "Name" or "Name(1,2)". Returns false if the text is not of that shape.
bool parse_call(std::string_view text, Call& out) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::size_t i = 0;
  while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 0) return false;
  out.name = std::string(text.substr(0, i));
  std::string_view rest = trim(text.substr(i));
  if (rest.empty()) return true;
  if (rest.front() != '(' || rest.back() != ')') return false;
  out.has_parens = true;
  rest = rest.substr(1, rest.size() - 2);
  while (true) {
    std::string_view item = trim(rest.substr(0, rest.find(',')));
    Int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) return false;
    out.args.push_back(v);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return true;
}

const RegistryEntry* find_entry(std::string_view name) {
  for (const auto& e : registry())
    if (e.name == name) return &e;
  return nullptr;
}

std::string substitute(std::string text, const std::map<std::string, Int>& values) {
  for (const auto& [key, value] : values) {
    const std::string token = "{" + key + "}";
    for (auto pos = text.find(token); pos != std::string::npos; pos = text.find(token, pos))
      text.replace(pos, token.size(), std::to_string(value));
  }
  return text;
}

std::string display_name(const RegistryEntry& e, const std::vector<Int>& args) {
  if (args.empty()) return e.name;
  std::string s = e.name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
  return s + ")";
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> r = build_registry();
  return r;
}

std::string registry_expression(const RegistryEntry& e, const std::vector<Int>& args) {
  if (args.size() != e.params.size())
    throw Error(Errc::UnknownSet, e.name + " takes " + std::to_string(e.params.size()) + " argument(s)");
  std::map<std::string, Int> values;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] < 0) throw Error(Errc::UnknownSet, e.name + ": arguments must be non-negative");
    values[e.params[i]] = args[i];
  }
  if (values.count("d")) values["d+1"] = values["d"] + 1;
  if (values.count("p")) {
    if (values["p"] > values["d"]) throw Error(Errc::UnknownSet, e.name + ": need p <= d");
    values["d-p"] = values["d"] - values["p"];
    values["d-p+1"] = values["d-p"] + 1;
  }
  if (!e.all.empty()) return substitute(e.all, values);
  return "(dim = 2 and (" + substitute(e.dim2, values) + ")) or (dim >= 3 and (" +
         substitute(e.dim3, values) + "))";
}

SetPredicate builtin(std::string_view name) {
  Call call;
  const RegistryEntry* e = parse_call(name, call) ? find_entry(call.name) : nullptr;
  if (!e) throw Error(Errc::UnknownSet, "no set named '" + std::string(name) + "'");
  return SetPredicate(dsl::parse(registry_expression(*e, call.args)), display_name(*e, call.args));
}

SetPredicate cylinder(const std::vector<int>& word) {
  if (word.empty()) throw Error(Errc::EmptyWord, "a cylinder needs a nonempty branch word");
  std::string name = "cyl(";
  for (int b : word) {
    if (b != 0 && b != 1) throw Error(Errc::SyntaxError, "branch words use only 0 and 1");
    name += static_cast<char>('0' + b);
  }
  name += ')';
  return SetPredicate(dsl::make(dsl::Cylinder{word}), name);
}

SetPredicate resolve_set(std::string_view text) {
  Call call;
  if (parse_call(text, call) && find_entry(call.name)) return builtin(text);
  bool used_names = false;
  const dsl::SetResolver by_name = [&](const std::string& name, const std::vector<Int>& args) -> dsl::NodePtr {
    const RegistryEntry* e = find_entry(name);
    if (!e) return nullptr;
    used_names = true;
    return dsl::parse(registry_expression(*e, args));
  };
  dsl::NodePtr root = dsl::parse(text, by_name);
  // Keep the user's spelling as the name; the expansion is unreadable.
  return SetPredicate(std::move(root), used_names ? std::string(text) : std::string());
}

nlohmann::json registry_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : registry()) {
    nlohmann::json row{{"name", e.name}, {"label", e.label}, {"note", e.note}};
    if (e.all.empty()) {
      row["dim2"] = e.dim2;
      row["dim3"] = e.dim3;
    } else {
      row["all"] = e.all;
    }
    if (!e.params.empty()) row["params"] = e.params;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tripart
