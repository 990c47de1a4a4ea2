#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "bench.hpp"
#include "cli.hpp"
#include "latdiss/io.hpp"

namespace fs = std::filesystem;
using namespace latdiss;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LATDISS_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Scratch directory removed at scope exit.
struct Scratch {
  fs::path dir;
  Scratch() : dir(fs::temp_directory_path() / ("latdiss_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const char* name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

}  // namespace

TEST_CASE("decide") {
  auto r = run({"decide", "ABCDACBADC"});
  CHECK(r.code == cli::kImpossible);
  CHECK(r.out == "not-contractible\n");
  r = run({"decide", "ABABCCDCBBDB"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "contractible\n");
  r = run({"decide", "--polygon", data("square.json")});
  CHECK(r.code == cli::kImpossible);
  CHECK(r.out == "ABCD not-contractible\n");
  r = run({"decide", "--polygon", "-"}, "[[0,0],[2,0],[1,1]]\n");
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "AAC contractible\n");

  CHECK(run({"decide", "AB1"}).code == cli::kUsage);
  CHECK(run({"decide"}).code == cli::kUsage);
  CHECK(run({"decide", "--polygon", "-"}, "[[0,0],[1,0]").code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("dissect and verify round trip") {
  Scratch s;
  auto r = run({"dissect", data("square.json"), "--unit"});
  CHECK(r.code == cli::kImpossible);
  CHECK(r.err == "no integral dissection exists (word ABCD not contractible)\n");

  const auto tri = s.write("tri.json", "[[0,0],[4,0],[0,1]]\n");
  r = run({"dissect", tri, "--unit"});
  REQUIRE(r.code == cli::kOk);
  CHECK(io::parse_dissection(r.out).dissection.triangles.size() == 2);
  const auto diss = s.write("tri_d.json", r.out);
  CHECK(run({"verify", tri, diss, "--mode", "unit"}).code == cli::kOk);

  const auto dodecagon = run({"realize", "ABABCCDCBBDB"});
  REQUIRE(dodecagon.code == cli::kOk);
  const auto poly = s.write("dodecagon.json", dodecagon.out);
  const auto out = (s.dir / "d.json").string();
  REQUIRE(run({"dissect", poly, "-o", out}).code == cli::kOk);
  const auto d = io::parse_dissection(slurp(out)).dissection;
  CHECK(d.triangles.size() == 10);
  for (const auto& t : d.triangles) CHECK(signed_area2(t) % 2 == 0);
  CHECK(run({"verify", poly, out, "--mode", "integral"}).code == cli::kOk);

  REQUIRE(run({"dissect", poly, "--unit", "-o", out}).code == cli::kOk);
  CHECK(run({"verify", poly, out, "--mode", "unit"}).code == cli::kOk);
}

TEST_CASE("verify exit codes") {
  Scratch s;
  const auto half = s.write("half.json", R"({"triangles":[[[0,0],[1,0],[1,1]],[[0,0],[1,1],[0,1]]]})");
  const auto cut = s.write("cut.json", R"({"triangles":[[[0,0],[1,0],[1,1]]]})");
  auto r = run({"verify", data("square.json"), half});
  CHECK(r.code == cli::kOk);
  CHECK(io::json::parse(r.out)["valid"] == true);
  r = run({"verify", data("square.json"), half, "--mode", "integral"});
  CHECK(r.code == cli::kInvalid);
  CHECK(io::json::parse(r.out)["valid"] == false);
  CHECK(run({"verify", data("square.json"), cut}).code == cli::kInvalid);
  CHECK(run({"verify", data("square.json"), half, "--mode", "exact"}).code == cli::kUsage);
  CHECK(run({"verify", data("square.json"), s.write("bad.json", "{\"triangles\": [[[0,0]")}).code == cli::kUsage);
  CHECK(run({"verify", data("square.json"), (s.dir / "missing.json").string()}).code == cli::kUsage);
}

TEST_CASE("witness") {
  Scratch s;
  const auto half = s.write("half.json", R"({"triangles":[[[0,0],[1,0],[1,1]],[[0,0],[1,1],[0,1]]]})");
  auto r = run({"witness", data("square.json"), half});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::json::parse(r.out);
  CHECK(j["area"] == "1/2");
  CHECK(j["doubled_area"] == 1);

  const auto tri = s.write("tri.json", "[[0,0],[2,0],[1,1]]");
  const auto one = s.write("one.json", R"({"triangles":[[[0,0],[2,0],[1,1]]]})");
  CHECK(run({"witness", tri, one}).code == cli::kUsage);
}

TEST_CASE("sperner") {
  auto r = run({"sperner", "ABCDACBADC"});
  REQUIRE(r.code == cli::kOk);
  auto j = io::json::parse(r.out);
  CHECK(j["diagonal_triangulations"] == 1430);
  CHECK(j["tricolor_free"] == 0);
  CHECK(j["biconditional_holds"] == true);

  j = io::json::parse(run({"sperner", "ABABCCDCBBDB"}).out);
  CHECK(j["tricolor_free"].get<int>() >= 1);

  j = io::json::parse(run({"sperner", "AAB"}).out);
  CHECK(j["diagonal_triangulations"] == 1);
  CHECK(j["tricolor_free"] == 1);

  CHECK(run({"sperner", "ABCDABCDABCDA"}).code == cli::kUsage);
}

TEST_CASE("render matches the golden file") {
  auto r = run({"render", data("pentagon.json"), data("pentagon_dissection.json")});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out == slurp(data("pentagon.svg")));

  r = run({"render", data("square.json")});
  REQUIRE(r.code == cli::kOk);
  std::size_t circles = 0;
  for (std::size_t at = r.out.find("<circle"); at != std::string::npos; at = r.out.find("<circle", at + 1)) ++circles;
  CHECK(circles >= 4);

  CHECK(run({"render", data("nope.json")}).code == cli::kUsage);
}

TEST_CASE("bench") {
  auto r = run({"bench", "-n", "1000", "10000", "--repeats", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("fit:") != std::string::npos);
  r = run({"bench"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("fit:") == std::string::npos);

  const auto rows = cli::bench_decide({1, 100}, 4, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].contractible);
  CHECK(cli::random_word(50, 3) == cli::random_word(50, 3));

  const auto fit = cli::fit_linear({{10, 1.0, false}, {20, 2.0, false}, {30, 3.0, false}});
  CHECK(fit.slope == doctest::Approx(0.1));
  CHECK(fit.intercept == doctest::Approx(0.0));
  CHECK(fit.r2 == doctest::Approx(1.0));
}

TEST_CASE("generators") {
  auto r = run({"random-polygon", "--vertices", "7", "--bound", "20", "--seed", "3"});
  REQUIRE(r.code == cli::kOk);
  CHECK(io::parse_polygon(r.out).size() == 7);
  CHECK(run({"random-polygon", "--vertices", "7", "--bound", "20", "--seed", "3"}).out == r.out);

  auto d = run({"random-dissection", "-", "--depth", "4", "--seed", "2"}, r.out);
  REQUIRE(d.code == cli::kOk);
  Scratch s;
  CHECK(run({"verify", s.write("p.json", r.out), s.write("d.json", d.out)}).code == cli::kOk);

  CHECK(run({"realize", "ABE"}).code == cli::kImpossible);
}
