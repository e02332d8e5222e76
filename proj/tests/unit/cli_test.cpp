#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "json.hpp"
#include "tripart/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tripart");
  std::ostringstream out, err;
  const int code = tripart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate") {
    const Run r = run({"enumerate", "11", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 56);
    const Run j = run({"--format", "json", "enumerate", "4"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out).size() == 5);
    const Run f = run({"enumerate", "11", "--filter", "Delta01"});
    CHECK(lines(f.out) == 3);
    CHECK(run({"enumerate", "11", "--filter", "D and Delta0"}).out == "(7,4)x[1,1]\n(6,5)x[1,1]\n(5,4,2)x[1,1,1]\n");
  }

  TEST_CASE("map and orbit") {
    const Run r = run({"map", "(6,3)x[1,1]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("TD") != std::string::npos);
    CHECK(r.out.find("(3)x[3]") != std::string::npos);
    CHECK(run({"map", "(7)x[1]"}).code == tripart::cli::kContractViolation);
    CHECK(run({"map", "(6,3)x[1,1]", "--branch", "t0"}).code == tripart::cli::kContractViolation);
    CHECK(run({"map", "(4,4)x[1,1]"}).code == tripart::cli::kUsageError);
    CHECK(run({"map", "(3,1)x[2,2]", "--branch", "t1inv"}).code == tripart::cli::kContractViolation);
    const Run o = run({"orbit", "(6,5)x[1,1]", "--steps", "2"});
    CHECK(o.code == 0);
    CHECK(o.out.find("(4,1)x[2,3]") != std::string::npos);
  }

  TEST_CASE("sets") {
    CHECK(run({"sets", "list"}).out.find("T1T1Delta11") != std::string::npos);
    const Run j = run({"--format", "json", "sets", "list"});
    CHECK(nlohmann::json::parse(j.out).is_array());
    CHECK(run({"sets", "show", "Delta01"}).code == 0);
    CHECK(run({"sets", "show", "Zeta"}).code == tripart::cli::kUsageError);
    CHECK(run({"sets", "eval", "K1 > Klast", "(5,1)x[2,1]"}).out == "true\n");
    CHECK(run({"sets", "eval", "Delta11", "(5,1)x[1,6]"}).out == "true\n");
    CHECK(run({"sets", "eval", "L1 <", "(5,1)x[2,1]"}).code == tripart::cli::kUsageError);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "delta-m", "--nmax", "12"}).code == 0);
    CHECK(run({"verify", "equicount", "D", "M0", "--nmax", "12"}).code == tripart::cli::kVerificationFailed);
    CHECK(run({"verify", "equicount", "Delta0", "M0", "--nmax", "12"}).code == 0);
    CHECK(run({"verify", "nonsense", "--nmax", "5"}).code == tripart::cli::kUsageError);
    CHECK(run({"verify", "offset", "--nmax", "5", "--d", "0"}).code == tripart::cli::kUsageError);
    CHECK(run({"enumerate", "61"}).code == tripart::cli::kUsageError);
    CHECK(run({"--desk-ceiling", "62", "enumerate", "61"}).code == 0);
    CHECK(run({}).code == tripart::cli::kUsageError);
    CHECK(run({"enumerate", "eleven"}).code == tripart::cli::kUsageError);
    const Run csv = run({"--format", "csv", "verify", "euler", "--nmax", "10"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("n,", 0) == 0);
  }

  TEST_CASE("certify") {
    const Run r = run({"certify", "D and Delta0", "E0", "0", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(5,4,2)x[1,1,1] -> (4,2,1)x[2,1,1]") != std::string::npos);
    CHECK(run({"certify", "Delta0", "M1", "0", "11"}).code == tripart::cli::kVerificationFailed);
    CHECK(run({"certify", "Delta0", "M0", "2", "11"}).code == tripart::cli::kUsageError);
  }

  TEST_CASE("series") {
    const Run r = run({"--format", "csv", "series", "partitions", "--N", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("11,56\n") != std::string::npos);
    CHECK(run({"series", "--check", "--N", "12"}).code == 0);
  }

  TEST_CASE("realmap") {
    const Run r = run({"realmap", "cf", "7,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0; 2, 3]") != std::string::npos);
    CHECK(run({"realmap", "orbit", "7/2,1", "--steps", "3"}).code == 0);
    CHECK(run({"realmap", "orbit", "1,2"}).code == tripart::cli::kUsageError);
  }

  TEST_CASE("output is deterministic and --out writes the same bytes") {
    const std::vector<std::string> args{"--format", "json", "verify", "cylinder1", "--nmax", "14"};
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    const auto path = std::filesystem::temp_directory_path() / "tripart_cli_test.json";
    std::vector<std::string> with_out{"--out", path.string()};
    with_out.insert(with_out.end(), args.begin(), args.end());
    CHECK(run(with_out).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
    std::filesystem::remove(path);
  }
}
