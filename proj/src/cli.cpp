#include "tripart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tripart/enumerate.hpp"
#include "tripart/identities.hpp"
#include "tripart/qseries.hpp"
#include "tripart/realmap.hpp"
#include "tripart/report.hpp"
#include "tripart/serialize.hpp"
#include "tripart/sets.hpp"
#include "tripart/trimap.hpp"

namespace tripart::cli {

namespace {

using report::Format;
using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BranchMismatch:
    case Errc::NotInjective:
    case Errc::NotOnto:
    case Errc::ImageOutsideCodomain:
      return kVerificationFailed;
    case Errc::WrongBranch:
    case Errc::DimensionOne:
    case Errc::NotInM0:
    case Errc::NotInM1:
    case Errc::OnDiagonal:
    case Errc::Overflow:
      return kContractViolation;
    default:
      return kUsageError;
  }
}

struct Settings {
  std::string format = "text";
  std::string out_path;
  int desk_ceiling = kDefaultDeskCeiling;
};

struct Result {
  std::string text;
  int code = kOk;
};

std::string map_line(const std::string& label, const Partition& in, const Partition& out) {
  return label + " " + to_string(in) + " -> " + to_string(out) + "\n";
}

Result do_map(const std::string& text, const std::string& branch, Format f) {
  const Partition p = parse_partition(text);
  std::string label;
  Partition image = p;
  if (branch == "auto") {
    const MapStep s = apply_T(p);
    label = std::string(to_string(s.branch));
    image = s.output;
  } else if (branch == "t0") {
    label = "T0", image = apply_branch(p, Branch::T0);
  } else if (branch == "t1") {
    label = "T1", image = apply_branch(p, Branch::T1);
  } else if (branch == "td") {
    label = "TD", image = apply_branch(p, Branch::TD);
  } else if (branch == "t0inv") {
    label = "T0inv", image = apply_T0_inverse(p);
  } else {
    label = "T1inv", image = apply_T1_inverse(p);
  }
  if (f == Format::Json)
    return {json{{"branch", label}, {"input", to_json(p)}, {"output", to_json(image)}}.dump(2) + "\n"};
  if (f == Format::Csv) return {"branch,input,output\n" + label + ",\"" + to_string(p) + "\",\"" + to_string(image) + "\"\n"};
  return {map_line(label, p, image)};
}

Result do_orbit(const std::string& text, int steps, Format f) {
  const Orbit o = orbit(parse_partition(text), steps);
  if (f == Format::Json) {
    json js = json::array();
    for (const auto& s : o.steps) js.push_back(report::to_json(s));
    return {json{{"start", to_json(o.start)}, {"steps", js}, {"terminal", to_json(o.terminal)}}.dump(2) + "\n"};
  }
  std::ostringstream os;
  if (f == Format::Csv) os << "step,branch,input,output\n";
  int i = 0;
  for (const auto& s : o.steps) {
    ++i;
    if (f == Format::Csv)
      os << i << ',' << to_string(s.branch) << ",\"" << to_string(s.input) << "\",\"" << to_string(s.output) << "\"\n";
    else
      os << map_line(std::string(to_string(s.branch)), s.input, s.output);
  }
  if (f == Format::Text) os << "terminal " << to_string(o.terminal) << "\n";
  return {os.str()};
}

Result do_sets_show(const std::string& name, Format f) {
  const SetPredicate pred = resolve_set(name);
  const RegistryEntry* entry = nullptr;
  for (const auto& e : registry())
    if (name.rfind(e.name, 0) == 0 && (name.size() == e.name.size() || name[e.name.size()] == '(')) entry = &e;
  if (f == Format::Json) {
    json j{{"name", pred.name()}, {"dsl", pred.to_dsl()}};
    if (entry) {
      j["label"] = entry->label;
      j["note"] = entry->note;
    }
    return {j.dump(2) + "\n"};
  }
  std::ostringstream os;
  os << pred.name();
  if (entry) os << "  " << entry->label << "  (" << entry->note << ")";
  os << "\n";
  if (entry && entry->all.empty())
    os << "  dim=2:  " << entry->dim2 << "\n  dim>=3: " << entry->dim3 << "\n";
  os << "  dsl:    " << pred.to_dsl() << "\n";
  return {os.str()};
}

Result do_realmap_orbit(const std::string& text, int steps, Format f) {
  const ConeOrbit o = slow_orbit(parse_cone_point(text), steps);
  if (f == Format::Json) {
    json pts = json::array();
    for (const auto& p : o.points) pts.push_back(to_string(p));
    json br = json::array();
    for (auto b : o.branches) br.push_back(std::string(to_string(b)));
    return {json{{"points", pts}, {"branches", br}, {"hit_diagonal", o.hit_diagonal}}.dump(2) + "\n"};
  }
  std::ostringstream os;
  if (f == Format::Csv) os << "step,branch,point\n0,," << '"' << to_string(o.points[0]) << "\"\n";
  else os << to_string(o.points[0]) << "\n";
  for (std::size_t i = 0; i < o.branches.size(); ++i) {
    if (f == Format::Csv)
      os << i + 1 << ',' << to_string(o.branches[i]) << ",\"" << to_string(o.points[i + 1]) << "\"\n";
    else
      os << "  " << to_string(o.branches[i]) << " -> " << to_string(o.points[i + 1]) << "\n";
  }
  if (f == Format::Text && o.hit_diagonal) os << "on the diagonal\n";
  return {os.str()};
}

Result do_realmap_cf(const std::string& text, int steps, Format f) {
  const ConePoint x = parse_cone_point(text);
  if (x.dimension() != 2) throw Error(Errc::BadRatio, "continued fractions need exactly two coordinates");
  const auto& c = x.coords();
  const auto digits = cf_digits_via_map(c[0], c[1], steps);
  const auto euclid = euclidean_cf(c[1] / c[0]);
  if (f == Format::Json)
    return {json{{"ratio", to_string(c[1] / c[0])}, {"map_digits", digits}, {"euclid_digits", euclid}}.dump(2) + "\n"};
  auto list = [](const std::vector<Int>& d) {
    std::string s = "[0; ";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
    return s + "]";
  };
  if (f == Format::Csv) return {"ratio,map_digits,euclid_digits\n" + to_string(c[1] / c[0]) + ",\"" + list(digits) + "\",\"" + list(euclid) + "\"\n"};
  return {to_string(c[1] / c[0]) + " = " + list(digits) + " by the map, " + list(euclid) + " by Euclid\n"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer partitions under the triangle map", "tripart"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "text, table, json or csv")
      ->check(CLI::IsMember({"text", "table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", s.out_path, "write the report to this file");
  app.add_option("--desk-ceiling", s.desk_ceiling, "largest n enumerated")->capture_default_str();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the partitions of n");
  int n = 0;
  std::string filter_text;
  enumerate_cmd->add_option("n", n)->required();
  enumerate_cmd->add_option("--filter", filter_text, "set name or DSL expression");

  auto* map_cmd = app.add_subcommand("map", "apply the triangle map once");
  std::string partition_text, branch = "auto";
  map_cmd->add_option("partition", partition_text)->required();
  map_cmd->add_option("--branch", branch)
      ->transform(CLI::IsMember({"auto", "t0", "t1", "td", "t0inv", "t1inv"}, CLI::ignore_case))
      ->capture_default_str();

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate the triangle map");
  int steps = 100;
  orbit_cmd->add_option("partition", partition_text)->required();
  orbit_cmd->add_option("--steps", steps)->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* sets_cmd = app.add_subcommand("sets", "the set registry and the predicate language");
  sets_cmd->require_subcommand(1);
  auto* sets_list = sets_cmd->add_subcommand("list", "all registered sets");
  auto* sets_show = sets_cmd->add_subcommand("show", "one set's definition");
  std::string set_name, set_name2;
  sets_show->add_option("name", set_name)->required();
  auto* sets_eval = sets_cmd->add_subcommand("eval", "test membership");
  sets_eval->add_option("predicate", set_name)->required();
  sets_eval->add_option("partition", partition_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem for n = 1..nmax");
  std::vector<std::string> verify_args;
  int nmax = 40, d = 1;
  verify_cmd->add_option("theorem", verify_args, "theorem name, or: equicount A B")->required();
  verify_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--d", d)->capture_default_str();

  auto* certify_cmd = app.add_subcommand("certify", "explicit bijection between two sets at one n");
  std::string route;
  certify_cmd->add_option("domain", set_name)->required();
  certify_cmd->add_option("codomain", set_name2)->required();
  certify_cmd->add_option("route", route, "branch letters 0, 1, D")->required();
  certify_cmd->add_option("n", n)->required();

  auto* series_cmd = app.add_subcommand("series", "generating function coefficients");
  int N = 60;
  bool cross = false;
  series_cmd->add_option("name", set_name, "closed form, set name or DSL");
  series_cmd->add_option("--N", N)->check(CLI::NonNegativeNumber)->capture_default_str();
  series_cmd->add_flag("--check", cross, "run every cross-route series identity");

  auto* realmap_cmd = app.add_subcommand("realmap", "the slow map on the real cone");
  realmap_cmd->require_subcommand(1);
  auto* real_orbit = realmap_cmd->add_subcommand("orbit", "iterate on a rational point");
  real_orbit->add_option("point", partition_text, "x1,x2,... with x = p/q")->required();
  real_orbit->add_option("--steps", steps)->check(CLI::NonNegativeNumber)->capture_default_str();
  auto* real_cf = realmap_cmd->add_subcommand("cf", "continued fraction digits of x2/x1");
  real_cf->add_option("point", partition_text, "x1,x2")->required();
  real_cf->add_option("--steps", steps)->check(CLI::NonNegativeNumber)->capture_default_str();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* inner : sub->get_subcommands({})) inner->fallthrough();
  }

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Result result;
  try {
    const Format f = report::parse_format(s.format);
    VerifyOptions vopt;
    vopt.enumerate.desk_ceiling = s.desk_ceiling;

    if (*enumerate_cmd) {
      PartitionList list = filter_text.empty() ? partitions_of(n, vopt.enumerate)
                                               : filter(n, resolve_set(filter_text), vopt.enumerate);
      result.text = report::render_partitions(list.items, f);
    } else if (*map_cmd) {
      result = do_map(partition_text, branch, f);
    } else if (*orbit_cmd) {
      result = do_orbit(partition_text, steps, f);
    } else if (*sets_cmd) {
      if (*sets_list) {
        result.text = report::render_registry(f);
      } else if (*sets_show) {
        result = do_sets_show(set_name, f);
      } else if (*sets_eval) {
        const bool in = resolve_set(set_name).contains(parse_partition(partition_text));
        result.text = f == Format::Json ? json{{"member", in}}.dump() + "\n" : std::string(in ? "true\n" : "false\n");
      }
    } else if (*verify_cmd) {
      CountReport r;
      if (verify_args.front() == "equicount") {
        if (verify_args.size() != 3) throw CLI::ValidationError("verify equicount", "needs exactly two sets");
        r = verify_equicount(resolve_set(verify_args[1]), resolve_set(verify_args[2]), nmax, vopt);
      } else {
        if (verify_args.size() != 1) throw CLI::ValidationError("verify", "takes one theorem name");
        if (std::find(theorem_names().begin(), theorem_names().end(), verify_args[0]) == theorem_names().end())
          throw CLI::ValidationError("verify", "unknown theorem '" + verify_args[0] + "'");
        r = verify_theorem(verify_args[0], nmax, d, vopt);
      }
      result.text = report::render(r, f);
      result.code = r.passed() ? kOk : kVerificationFailed;
    } else if (*certify_cmd) {
      const auto cert = certify_bijection(resolve_set(set_name), resolve_set(set_name2), route == "-" ? "" : route,
                                          n, vopt.enumerate);
      result.text = report::render(cert, f);
    } else if (*series_cmd) {
      if (cross) {
        const auto checks = series_cross_checks(N, std::min(N, 40), vopt);
        result.text = report::render(checks, f);
        result.code = std::all_of(checks.begin(), checks.end(), [](const SeriesCheck& c) { return c.pass; })
                          ? kOk
                          : kVerificationFailed;
      } else {
        if (set_name.empty()) throw CLI::ValidationError("series", "needs a name or --check");
        result.text = report::render(named_series(set_name, N, vopt), set_name, f);
      }
    } else if (*realmap_cmd) {
      result = *real_orbit ? do_realmap_orbit(partition_text, steps, f) : do_realmap_cf(partition_text, steps, f);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kContractViolation;
  }

  if (!s.out_path.empty()) {
    std::ofstream file(s.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << s.out_path << "\n";
      return kUsageError;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace tripart::cli
