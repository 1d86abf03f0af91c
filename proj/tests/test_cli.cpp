#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "pctoeplitz/cli.hpp"
#include "pctoeplitz/errors.hpp"
#include "pctoeplitz/symbol_io.hpp"

using namespace pctoeplitz;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PCTOEPLITZ_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("pctoeplitz_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Mean SVG y of the interior points of every arc polyline.
std::vector<double> arc_mean_y(const std::string& svg) {
  std::vector<double> means;
  const std::regex poly(R"(class="arc"[^>]*points="([^"]*)\")");
  for (std::sregex_iterator it(svg.begin(), svg.end(), poly), end; it != end; ++it) {
    std::istringstream pts((*it)[1].str());
    std::string pair;
    std::vector<double> ys;
    while (pts >> pair) ys.push_back(std::stod(pair.substr(pair.find(',') + 1)));
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < ys.size(); ++i) sum += ys[i];
    means.push_back(sum / static_cast<double>(ys.size() - 2));
  }
  return means;
}

}  // namespace

TEST(Cli, SpectrumCsvSignChord) {
  const auto r = run_cli({"spectrum", data("sgn.json"), "--p", "2", "--resolution", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("segment_id,provenance,theta_or_r,re,im"), std::string::npos);
  int arc_rows = 0;
  for (const auto& row : csv_rows(r.out)) {
    ASSERT_EQ(row.size(), 5u);
    if (row[1].rfind("arc:", 0) == 0) {
      ++arc_rows;
      EXPECT_LT(std::abs(std::stod(row[4])), 1e-9);
      EXPECT_GT(std::stod(row[3]), -1.0);
      EXPECT_LT(std::stod(row[3]), 1.0);
    }
  }
  EXPECT_EQ(arc_rows, 128);
}

TEST(Cli, SpectrumConstantIsSinglePoint) {
  const auto r = run_cli({"spectrum", data("constant.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) {
    EXPECT_EQ(row[0], rows[0][0]);
    EXPECT_EQ(row[3], rows[0][3]);
    EXPECT_EQ(row[4], rows[0][4]);
  }
}

TEST(Cli, SvgArcsOnOppositeSides) {
  const auto three = run_cli({"spectrum", data("sgn.json"), "--p", "3", "--out", "svg"});
  const auto three_half = run_cli({"spectrum", data("sgn.json"), "--p", "1.5", "--out", "svg"});
  ASSERT_EQ(three.code, 0);
  ASSERT_EQ(three_half.code, 0);
  EXPECT_NE(three.out.find("viewBox=\"0 0 800 800\""), std::string::npos);
  const auto a = arc_mean_y(three.out), b = arc_mean_y(three_half.out);
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  // the real axis sits at y = 400; SVG y grows downwards
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NE(a[j] > 400.0, b[j] > 400.0);
    EXPECT_GT(std::abs(a[j] - 400.0), 1.0);
  }
}

TEST(Cli, IndexCommand) {
  auto r = run_cli({"index", data("rotation.json"), "--p", "2", "--lambda", "0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n");
  r = run_cli({"index", data("rotation.json"), "--lambda", "2,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  r = run_cli({"index", data("sgn.json"), "--p", "2", "--lambda", "0,0"});
  EXPECT_EQ(r.code, cli::kExitInSpectrum);
  EXPECT_NE(r.err.find("lambda in essential spectrum"), std::string::npos);
}

TEST(Cli, VerdictCommand) {
  auto r = run_cli({"verdict", data("sgn.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Unbounded: jump at t=0.000\n");
  r = run_cli({"verdict", data("trig_poly.json")});
  EXPECT_EQ(r.out, "Bounded: trigonometric polynomial\n");
  r = run_cli({"verdict", data("continuous_gluing.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("Unknown", 0), 0u);
  EXPECT_NE(r.out.find("n,bmo,bmo_log,vmo_defect,vmo_log_defect"), std::string::npos);
}

TEST(Cli, ExperimentTables) {
  auto r = run_cli({"experiment", "growth", data("constant.json"), "--n", "8,16,32"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# experiment=growth"), std::string::npos);
  for (const auto& row : csv_rows(r.out)) EXPECT_EQ(row[1], "1");

  r = run_cli({"experiment", "growth", data("sgn.json"), "--n", "16,64,256"});
  ASSERT_EQ(r.code, 0);
  double prev = 0.0;
  for (const auto& row : csv_rows(r.out)) {
    EXPECT_GT(std::stod(row[1]), prev);
    prev = std::stod(row[1]);
  }

  r = run_cli({"experiment", "probe", data("sgn.json"), "--n", "8,16,32", "--lambda", "0,0"});
  ASSERT_EQ(r.code, 0);
  prev = 1e300;
  for (const auto& row : csv_rows(r.out)) {
    EXPECT_LT(std::stod(row[1]), prev);
    prev = std::stod(row[1]);
  }

  r = run_cli({"experiment", "indexcheck", data("rotation.json"), "--lambda", "0,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-1,-1,"), std::string::npos);

  r = run_cli({"experiment", "lindelof", data("rotation.json"), "--t", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("m,left_re,left_im,right_re,right_im"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, cli::kExitParse);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitParse);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"spectrum", "/nonexistent/file.json"}).code, cli::kExitParse);
  EXPECT_EQ(run_cli({"spectrum", temp_file("broken.json", "{\"pieces\": [")}).code, cli::kExitParse);
  EXPECT_EQ(run_cli({"spectrum", temp_file("gap.json", R"({"pieces": [
      {"start_deg": 0, "end_deg": 90, "coeffs": [{"k": 0, "re": 1, "im": 0}]},
      {"start_deg": 180, "end_deg": 360, "coeffs": [{"k": 0, "re": 2, "im": 0}]}]})")}).code,
            cli::kExitParse);
  EXPECT_EQ(run_cli({"spectrum", temp_file("deg.json", R"({"pieces": [
      {"start_deg": 0, "end_deg": 400, "coeffs": [{"k": 0, "re": 1, "im": 0}]}]})")}).code,
            cli::kExitParse);
  EXPECT_EQ(run_cli({"spectrum", data("sgn.json"), "--p", "1"}).code, cli::kExitDomain);
  EXPECT_EQ(run_cli({"spectrum", data("sgn.json"), "--resolution", "4"}).code, cli::kExitDomain);
  EXPECT_EQ(run_cli({"index", data("sgn.json"), "--lambda", "abc"}).code, cli::kExitParse);
  EXPECT_EQ(run_cli({"experiment", "growth", data("sgn.json"), "--n", "70000"}).code, cli::kExitDomain);
  EXPECT_EQ(run_cli({"experiment", "probe", data("sgn.json"), "--n", "4096"}).code, cli::kExitDomain);
  EXPECT_EQ(run_cli({"index", data("sgn.json"), "--lambda", "0,0"}).code, cli::kExitInSpectrum);
}

TEST(Cli, Determinism) {
  const std::vector<std::vector<std::string>> commands{
      {"spectrum", data("sgn.json"), "--p", "3"},
      {"spectrum", data("sgn.json"), "--p", "1.5", "--out", "svg"},
      {"verdict", data("continuous_gluing.json")},
      {"experiment", "growth", data("sgn.json"), "--n", "16,64"},
      {"experiment", "probe", data("sgn.json"), "--n", "8,32"},
      {"normalize", data("trig_poly.json")}};
  for (const auto& cmd : commands) {
    const auto a = run_cli(cmd), b = run_cli(cmd);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

TEST(Cli, OutputFileMatchesStdout) {
  const auto path = (std::filesystem::temp_directory_path() / "pctoeplitz_test_out.csv").string();
  const auto r = run_cli({"spectrum", data("sgn.json"), "-o", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run_cli({"spectrum", data("sgn.json")}).out);
}

TEST(SymbolIo, RoundTripIsIdempotent) {
  const std::string messy = R"({"pieces": [
    {"end_deg": 360, "start_deg": 180.0, "coeffs": [{"k": 1, "re": 0.1, "im": 0}, {"k": -1, "re": 0, "im": 0.5}]},
    {"start_deg": 360, "end_deg": 180, "coeffs": [{"im": -0.25, "re": 1e-3, "k": 0}]}]})";
  for (const std::string& text : {messy, std::string(R"({"pieces": [{"start_deg": 0, "end_deg": 360,
      "coeffs": [{"k": 0, "re": 0.1, "im": 0.3}]}]})")}) {
    const auto once = serialize_symbol_file(parse_symbol_file(text));
    const auto twice = serialize_symbol_file(parse_symbol_file(once));
    EXPECT_EQ(once, twice);
    // through the symbol type as well
    const auto via_symbol = serialize_symbol_file(to_symbol_file(to_symbol(parse_symbol_file(once))));
    EXPECT_EQ(serialize_symbol_file(parse_symbol_file(via_symbol)), via_symbol);
  }
  for (const auto& name : {"sgn.json", "rotation.json", "constant.json", "trig_poly.json", "continuous_gluing.json"}) {
    const auto first = run_cli({"normalize", data(name)});
    ASSERT_EQ(first.code, 0) << name;
    const auto again = run_cli({"normalize", temp_file("norm.json", first.out)});
    EXPECT_EQ(first.out, again.out) << name;
  }
}

TEST(SymbolIo, ParseErrors) {
  EXPECT_THROW(parse_symbol_file("[]"), ParseError);
  EXPECT_THROW(parse_symbol_file(R"({"pieces": []})"), ParseError);
  EXPECT_THROW(parse_symbol_file(R"({"pieces": [{"start_deg": 0, "end_deg": 360, "coeffs": []}]})"), ParseError);
  EXPECT_THROW(parse_symbol_file(R"({"pieces": [{"start_deg": -1, "end_deg": 360, "coeffs": [{"k": 0, "re": 1, "im": 0}]}]})"),
               ParseError);
  EXPECT_THROW(parse_symbol_file(R"({"pieces": [{"start_deg": 0, "end_deg": 360,
      "coeffs": [{"k": 0, "re": 1, "im": 0}, {"k": 0, "re": 2, "im": 0}]}]})"),
               ParseError);
  EXPECT_THROW(parse_symbol_file(R"({"pieces": [{"start_deg": 0, "end_deg": 360, "coeffs": [{"k": 0.5, "re": 1, "im": 0}]}]})"),
               ParseError);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(cli::format_number(1.0), "1");
  EXPECT_EQ(cli::format_number(-0.0), "0");
  EXPECT_EQ(cli::format_number(0.1), "0.1");
  EXPECT_EQ(cli::format_number(std::numeric_limits<double>::infinity()), "inf");
  const double x = 0.27111537081489845;
  EXPECT_EQ(std::stod(cli::format_number(x)), x);
}
