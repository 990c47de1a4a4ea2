#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "latdiss/combi.hpp"
#include "latdiss/dissect.hpp"
#include "latdiss/error.hpp"
#include "latdiss/gen.hpp"
#include "latdiss/io.hpp"
#include "latdiss/svg.hpp"
#include "latdiss/verify.hpp"
#include "latdiss/words.hpp"

namespace latdiss::cli {

namespace {

using io::json;

// Raised for bad input that should end the command with kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::int64_t default_bound() {
  if (const char* env = std::getenv("LATDISS_COORD_BOUND")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw UsageError("LATDISS_COORD_BOUND is not an integer");
    }
  }
  return kDefaultCoordBound;
}

struct Options {
  std::string word;
  std::string polygon_file;
  std::string dissection_file;
  std::string output;
  std::string mode = "any";
  bool unit = false;
  std::vector<std::size_t> lengths;
  std::uint64_t seed = 1;
  int repeats = 3;
  std::int64_t bound = 0;
  std::size_t vertices = 6;
  std::size_t depth = 5;
};

int cmd_decide(const Options& o, std::istream& in, std::ostream& out) {
  if (!o.polygon_file.empty()) {
    bool all = true;
    for (const auto& polygon : io::parse_polygons(read_input(o.polygon_file, in))) {
      const auto word = boundary_word(polygon);
      const bool ok = decide_contractible(word).contractible;
      all &= ok;
      out << word.letters() << ' ' << (ok ? "contractible" : "not-contractible") << '\n';
    }
    return all ? kOk : kImpossible;
  }
  if (o.word.empty()) throw UsageError("decide needs a word or --polygon FILE");
  const auto result = decide_contractible(CyclicWord(o.word));
  out << (result.contractible ? "contractible" : "not-contractible") << '\n';
  return result.contractible ? kOk : kImpossible;
}

int cmd_dissect(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto polygon = io::parse_polygon(read_input(o.polygon_file, in));
  const auto dissection = o.unit ? unit_dissection(polygon) : diagonal_dissection(polygon);
  if (!dissection) {
    err << "no integral dissection exists (word " << boundary_word(polygon).letters() << " not contractible)\n";
    return kImpossible;
  }
  write_output(o.output, io::dissection_to_json(polygon, *dissection).dump() + "\n", out);
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const auto polygon = io::parse_polygon(read_input(o.polygon_file, in));
  const auto file = io::parse_dissection(read_input(o.dissection_file, in));
  const auto report = verify_dissection(polygon, file.dissection, parse_verify_mode(o.mode));
  out << io::report_to_json(report).dump(2) << '\n';
  return report.valid ? kOk : kInvalid;
}

int cmd_witness(const Options& o, std::istream& in, std::ostream& out) {
  const auto polygon = io::parse_polygon(read_input(o.polygon_file, in));
  const auto file = io::parse_dissection(read_input(o.dissection_file, in));
  const auto t = witness_noninteger(polygon, file.dissection);
  const std::int64_t area2 = signed_area2(t);
  json j = json::object();
  j["triangle"] = io::to_json(t);
  j["colors"] = std::string{to_char(color_of(t.v0)), to_char(color_of(t.v1)), to_char(color_of(t.v2))};
  j["doubled_area"] = area2;
  j["area"] = std::to_string(area2) + "/2";
  out << j.dump() << '\n';
  return kOk;
}

int cmd_sperner(const Options& o, std::ostream& out) {
  const auto report = sperner_check(CyclicWord(o.word));
  json j = json::object();
  j["word"] = report.word;
  j["contractible"] = report.contractible;
  j["diagonal_triangulations"] = report.diagonal_examined;
  j["tricolor_free"] = report.tricolor_free;
  j["star_colorings"] = report.star_colorings;
  j["star_colorings_with_tricolor"] = report.star_colorings_with_tricolor;
  j["biconditional_holds"] = report.biconditional_holds;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  const auto polygon = io::parse_polygon(read_input(o.polygon_file, in));
  std::string svg;
  if (!o.dissection_file.empty()) {
    const auto file = io::parse_dissection(read_input(o.dissection_file, in));
    svg = render_svg(polygon, &file.dissection);
  } else {
    svg = render_svg(polygon);
  }
  write_output(o.output, svg, out);
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto rows = bench_decide(o.lengths, o.seed, o.repeats);
  out << std::setw(10) << "length" << std::setw(14) << "seconds" << std::setw(14) << "ns/letter"
      << std::setw(10) << "ratio" << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << std::setw(10) << r.length << std::setw(14) << std::scientific << std::setprecision(3) << r.seconds
        << std::setw(14) << std::fixed << std::setprecision(2)
        << (r.length ? r.seconds * 1e9 / static_cast<double>(r.length) : 0.0);
    if (i > 0 && rows[i - 1].seconds > 0) {
      out << std::setw(10) << std::setprecision(2) << r.seconds / rows[i - 1].seconds;
    }
    out << '\n';
  }
  if (rows.size() >= 2) {
    const auto fit = fit_linear(rows);
    out << std::scientific << std::setprecision(3) << "fit: seconds = " << fit.intercept << " + " << fit.slope
        << " * length, r^2 = " << std::fixed << std::setprecision(4) << fit.r2 << '\n';
  }
  return kOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  RealizeOptions options;
  options.coord_bound = o.bound > 0 ? o.bound : default_bound();
  const auto polygon = realize_word(CyclicWord(o.word), options);
  if (!polygon) return kImpossible;
  out << io::to_json(std::vector<LatticePoint>(polygon->vertices().begin(), polygon->vertices().end())).dump()
      << '\n';
  return kOk;
}

int cmd_random_polygon(const Options& o, std::ostream& out) {
  const auto polygon = random_convex_polygon(o.vertices, o.bound > 0 ? o.bound : default_bound(), o.seed);
  out << io::to_json(std::vector<LatticePoint>(polygon.vertices().begin(), polygon.vertices().end())).dump()
      << '\n';
  return kOk;
}

int cmd_random_dissection(const Options& o, std::istream& in, std::ostream& out) {
  const auto polygon = io::parse_polygon(read_input(o.polygon_file, in));
  const auto d = random_dissection(polygon, o.depth, o.seed);
  write_output(o.output, io::dissection_to_json(polygon, d).dump() + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer-area dissections of convex lattice polygons", "latdiss"};
  app.require_subcommand(1);
  Options o;

  auto* decide = app.add_subcommand("decide", "Decide whether a cyclic word (or a polygon's boundary word) is contractible");
  decide->add_option("word", o.word, "Cyclic word over A-Z");
  decide->add_option("--polygon", o.polygon_file, "Polygon file (one JSON array per line, - for stdin)");

  auto* dissect = app.add_subcommand("dissect", "Construct an integral (or with --unit, area-1) dissection");
  dissect->add_option("polygon", o.polygon_file, "Polygon file")->required();
  dissect->add_flag("--unit", o.unit, "Refine into triangles of area 1");
  dissect->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Verify a dissection of a polygon");
  verify->add_option("polygon", o.polygon_file, "Polygon file")->required();
  verify->add_option("dissection", o.dissection_file, "Dissection file")->required();
  verify->add_option("--mode", o.mode, "integral, unit or any")->check(CLI::IsMember({"integral", "unit", "any"}));

  auto* witness = app.add_subcommand("witness", "Find a non-integer-area triangle in a dissection");
  witness->add_option("polygon", o.polygon_file, "Polygon file")->required();
  witness->add_option("dissection", o.dissection_file, "Dissection file")->required();

  auto* sperner = app.add_subcommand("sperner", "Check tricolor triangles over all diagonal and star triangulations");
  sperner->add_option("word", o.word, "Cyclic word, at most 12 letters")->required();

  auto* render = app.add_subcommand("render", "Render a polygon and optional dissection as SVG");
  render->add_option("polygon", o.polygon_file, "Polygon file")->required();
  render->add_option("dissection", o.dissection_file, "Dissection file");
  render->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Time the contractibility decider on random words");
  bench->add_option("-n,--length", o.lengths, "Word lengths");
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_option("--repeats", o.repeats, "Timing repeats per length (best is reported)");

  auto* realize = app.add_subcommand("realize", "Find a convex lattice polygon with the given boundary word");
  realize->add_option("word", o.word, "Cyclic word over A-D")->required();
  realize->add_option("--bound", o.bound, "Coordinate bound (default $LATDISS_COORD_BOUND or 50)");

  auto* random_polygon = app.add_subcommand("random-polygon", "Generate a random convex lattice polygon");
  random_polygon->add_option("--vertices", o.vertices, "Number of vertices");
  random_polygon->add_option("--bound", o.bound, "Coordinate bound (default $LATDISS_COORD_BOUND or 50)");
  random_polygon->add_option("--seed", o.seed, "Random seed");

  auto* random_dissection_cmd = app.add_subcommand("random-dissection", "Generate a random dissection of a polygon");
  random_dissection_cmd->add_option("polygon", o.polygon_file, "Polygon file")->required();
  random_dissection_cmd->add_option("--depth", o.depth, "Number of random splits");
  random_dissection_cmd->add_option("--seed", o.seed, "Random seed");
  random_dissection_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (decide->parsed()) return cmd_decide(o, in, out);
    if (dissect->parsed()) return cmd_dissect(o, in, out, err);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (witness->parsed()) return cmd_witness(o, in, out);
    if (sperner->parsed()) return cmd_sperner(o, out);
    if (render->parsed()) return cmd_render(o, in, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (realize->parsed()) return cmd_realize(o, out);
    if (random_polygon->parsed()) return cmd_random_polygon(o, out);
    if (random_dissection_cmd->parsed()) return cmd_random_dissection(o, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::TheoremViolation ? kInternal : kUsage;
  }
  return kUsage;
}

}  // namespace latdiss::cli
