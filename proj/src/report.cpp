#include "tripart/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "tripart/serialize.hpp"
#include "tripart/sets.hpp"

namespace tripart::report {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "text" || name == "table") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

json partition_list(const std::vector<Partition>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string join(const std::vector<Partition>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string signature(const RegistryEntry& e) {
  std::string name = e.name;
  if (e.params.empty()) return name;
  name += "(";
  for (std::size_t i = 0; i < e.params.size(); ++i) name += (i ? "," : "") + e.params[i];
  return name + ")";
}

}  // namespace

json to_json(const Verdict& v) {
  json j{{"claim", v.claim}, {"asserted", v.asserted}, {"pass", v.pass}, {"detail", v.detail}};
  j["counterexample"] = v.counterexample ? json(*v.counterexample) : json(nullptr);
  if (!v.pass && (!v.only_left.empty() || !v.only_right.empty())) {
    j["only_left"] = partition_list(v.only_left);
    j["only_right"] = partition_list(v.only_right);
  }
  return j;
}

json to_json(const CountReport& r) {
  json rows = json::array();
  for (int n = r.n_min; n <= r.n_max; ++n) {
    json row{{"n", n}};
    for (std::size_t c = 0; c < r.columns.size(); ++c) row[r.columns[c]] = r.count(n, c);
    rows.push_back(std::move(row));
  }
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"title", r.title}, {"n_min", r.n_min},     {"n_max", r.n_max},         {"columns", r.columns},
          {"counts", rows},   {"verdicts", verdicts}, {"passed", r.passed()}};
}

json to_json(const BijectionCertificate& c) {
  json pairs = json::array();
  for (const auto& p : c.pairs) pairs.push_back({{"source", to_string(p.source)}, {"image", to_string(p.image)}});
  return {{"n", c.n}, {"domain", c.domain_name}, {"codomain", c.codomain_name}, {"route", c.route}, {"pairs", pairs}};
}

json to_json(const SeriesCoeffs& s, const std::string& name) {
  return {{"name", name}, {"N", s.order()}, {"coefficients", s.coeffs()}};
}

json to_json(const MapStep& s) {
  return {{"input", tripart::to_json(s.input)},
          {"branch", std::string(to_string(s.branch))},
          {"output", tripart::to_json(s.output)}};
}

std::string render(const CountReport& r, Format f) {
  if (f == Format::Json) return dump(to_json(r));
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "n";
    for (const auto& c : r.columns) os << ',' << csv_field(c);
    os << '\n';
    for (int n = r.n_min; n <= r.n_max; ++n) {
      os << n;
      for (std::size_t c = 0; c < r.columns.size(); ++c) os << ',' << r.count(n, c);
      os << '\n';
    }
    return os.str();
  }
  os << r.title << " (n = " << r.n_min << ".." << r.n_max << ")\n";
  std::vector<std::size_t> width;
  for (const auto& c : r.columns) width.push_back(std::max<std::size_t>(c.size(), 6));
  os << std::setw(4) << "n";
  for (std::size_t c = 0; c < r.columns.size(); ++c) os << "  " << std::setw(static_cast<int>(width[c])) << r.columns[c];
  os << '\n';
  for (int n = r.n_min; n <= r.n_max; ++n) {
    os << std::setw(4) << n;
    for (std::size_t c = 0; c < r.columns.size(); ++c)
      os << "  " << std::setw(static_cast<int>(width[c])) << r.count(n, c);
    os << '\n';
  }
  os << '\n';
  for (const auto& v : r.verdicts) {
    os << (v.pass ? "PASS" : "FAIL") << (v.asserted ? "  " : " (info)  ") << v.claim;
    if (!v.detail.empty()) os << "  [" << v.detail << "]";
    os << '\n';
    if (!v.pass && v.counterexample) {
      os << "      first counterexample: n = " << *v.counterexample << '\n';
      if (!v.only_left.empty()) os << "      only on the left: " << join(v.only_left) << '\n';
      if (!v.only_right.empty()) os << "      only on the right: " << join(v.only_right) << '\n';
    }
  }
  os << (r.passed() ? "all asserted claims hold\n" : "some asserted claims FAILED\n");
  return os.str();
}

std::string render(const BijectionCertificate& c, Format f) {
  if (f == Format::Json) return dump(to_json(c));
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "source,route,image\n";
    for (const auto& p : c.pairs) os << csv_field(to_string(p.source)) << ',' << c.route << ',' << csv_field(to_string(p.image)) << '\n';
    return os.str();
  }
  os << c.domain_name << " -> " << c.codomain_name << " via route " << c.route << " at n = " << c.n << ": "
     << c.pairs.size() << " pairs\n";
  for (const auto& p : c.pairs) os << "  " << to_string(p.source) << " -> " << to_string(p.image) << '\n';
  return os.str();
}

std::string render(const SeriesCoeffs& s, const std::string& name, Format f) {
  if (f == Format::Json) return dump(to_json(s, name));
  std::ostringstream os;
  if (f == Format::Csv) os << "n,coefficient\n";
  else os << name << " to order " << s.order() << '\n';
  for (int n = 0; n <= s.order(); ++n) os << n << (f == Format::Csv ? "," : "  ") << s[n] << '\n';
  return os.str();
}

std::string render(const std::vector<SeriesCheck>& checks, Format f) {
  if (f == Format::Json) {
    json out = json::array();
    for (const auto& c : checks)
      out.push_back({{"name", c.name},
                     {"from", c.from},
                     {"N", c.N},
                     {"pass", c.pass},
                     {"first_difference", c.first_difference ? json(*c.first_difference) : json(nullptr)},
                     {"detail", c.detail}});
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) os << "check,from,N,pass,first_difference\n";
  for (const auto& c : checks) {
    if (f == Format::Csv)
      os << csv_field(c.name) << ',' << c.from << ',' << c.N << ',' << (c.pass ? "true" : "false") << ','
         << (c.first_difference ? std::to_string(*c.first_difference) : "") << '\n';
    else
      os << (c.pass ? "PASS  " : "FAIL  ") << c.name << " (n = " << c.from << ".." << c.N << ")"
         << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
  }
  return os.str();
}

std::string render_partitions(const std::vector<Partition>& items, Format f) {
  if (f == Format::Json) {
    json out = json::array();
    for (const auto& p : items) out.push_back(tripart::to_json(p));
    return dump(out);
  }
  std::ostringstream os;
  if (f == Format::Csv) os << "partition,size,dimension,class\n";
  for (const auto& p : items) {
    if (f == Format::Csv)
      os << csv_field(to_string(p)) << ',' << p.size() << ',' << p.dimension() << ',' << to_string(classify(p)) << '\n';
    else
      os << to_string(p) << '\n';
  }
  return os.str();
}

std::string render_registry(Format f) {
  if (f == Format::Json) return dump(registry_json());
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "name,dim2,dim>=3,all dimensions,note\n";
    for (const auto& e : registry())
      os << csv_field(signature(e)) << ',' << csv_field(e.dim2) << ',' << csv_field(e.dim3) << ',' << csv_field(e.all) << ',' << csv_field(e.note)
         << '\n';
    return os.str();
  }
  std::size_t w = 4;
  for (const auto& e : registry()) w = std::max(w, signature(e).size() + 2);
  for (const auto& e : registry()) {
    os << std::left << std::setw(static_cast<int>(w)) << signature(e);
    if (e.all.empty()) os << "dim=2: " << e.dim2 << "\n" << std::string(w, ' ') << "dim>=3: " << e.dim3 << '\n';
    else os << e.all << '\n';
  }
  return os.str();
}

}  // namespace tripart::report
