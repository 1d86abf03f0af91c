#include "pctoeplitz/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "pctoeplitz/errors.hpp"
#include "pctoeplitz/symbol_io.hpp"

namespace pctoeplitz::cli {

namespace {

constexpr const char* kArcPalette[] = {"#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

complex parse_lambda(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = first + item.size();
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError("cannot parse lambda component \"" + item + "\"");
    parts.push_back(v);
  }
  if (parts.empty() || parts.size() > 2) throw ParseError("lambda must be given as re,im");
  return {parts[0], parts.size() == 2 ? parts[1] : 0.0};
}

std::string format_complex(complex z) { return format_number(z.real()) + "," + format_number(z.imag()); }

// Maps the complex plane window onto the 800 x 800 viewport.
struct Viewport {
  double cx = 0.0, cy = 0.0, half = 1.0;
  static constexpr double kSize = 800.0;

  explicit Viewport(const std::vector<complex>& pts) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (complex z : pts) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
    if (pts.empty()) x0 = x1 = y0 = y1 = 0.0;
    cx = 0.5 * (x0 + x1);
    cy = 0.5 * (y0 + y1);
    half = 0.5 * std::max(x1 - x0, y1 - y0);
    if (half <= 0.0) half = 1.0;
    half *= 1.1;
  }
  double x(double re) const { return (re - (cx - half)) / (2.0 * half) * kSize; }
  double y(double im) const { return (cy + half - im) / (2.0 * half) * kSize; }
};

std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return std::string(buf) == "-0.000" ? "0.000" : buf;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write output file: " + path);
  file << text;
}

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must lie in (1, inf)");
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_spectrum_csv(const SpectrumDescription& spectrum, std::ostream& out) {
  out << "# command=spectrum\n# p=" << format_number(spectrum.p)
      << "\n# resolution=" << spectrum.resolution << "\n";
  out << "segment_id,provenance,theta_or_r,re,im\n";
  for (std::size_t s = 0; s < spectrum.segments.size(); ++s) {
    const SpectrumSegment& seg = spectrum.segments[s];
    const auto& pts = seg.curve.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::string provenance;
      if (seg.provenance == Provenance::RangePiece) {
        provenance = "range:" + std::to_string(seg.index);
      } else {
        const bool endpoint = i == 0 || i + 1 == pts.size();
        provenance = (endpoint ? "limit:" : "arc:") + std::to_string(seg.index);
      }
      out << s << ',' << provenance << ',' << format_number(seg.parameters[i]) << ','
          << format_complex(pts[i]) << '\n';
    }
  }
}

void write_spectrum_svg(const SpectrumDescription& spectrum, std::ostream& out) {
  const Viewport view(spectrum.points());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "<!-- essential spectrum, p=" << format_number(spectrum.p) << " -->\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const double ax = view.x(0.0), ay = view.y(0.0);
  if (ay >= 0.0 && ay <= Viewport::kSize)
    out << "<line class=\"axis\" x1=\"0\" y1=\"" << svg_coord(ay) << "\" x2=\"800\" y2=\"" << svg_coord(ay)
        << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  if (ax >= 0.0 && ax <= Viewport::kSize)
    out << "<line class=\"axis\" x1=\"" << svg_coord(ax) << "\" y1=\"0\" x2=\"" << svg_coord(ax)
        << "\" y2=\"800\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  for (const SpectrumSegment& seg : spectrum.segments) {
    const bool arc = seg.provenance == Provenance::JumpArc;
    const std::string color = arc ? kArcPalette[seg.index % std::size(kArcPalette)] : "#1f77b4";
    const std::string cls = arc ? "arc\" data-jump=\"" + std::to_string(seg.index) : "range\" data-piece=\"" + std::to_string(seg.index);
    const auto& pts = seg.curve.points;
    if (pts.size() == 1) {
      out << "<circle class=\"" << cls << "\" cx=\"" << svg_coord(view.x(pts[0].real())) << "\" cy=\""
          << svg_coord(view.y(pts[0].imag())) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      continue;
    }
    out << '<' << (seg.curve.closed ? "polygon" : "polyline") << " class=\"" << cls << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"" << (arc ? "2.5" : "1.5") << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out << (i ? " " : "") << svg_coord(view.x(pts[i].real())) << ',' << svg_coord(view.y(pts[i].imag()));
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

void write_oscillation_csv(const OscillationReport& report, std::ostream& out) {
  out << "# oscillation ladder of Q(a)\n# delta=" << format_number(report.delta)
      << "\n# hint=" << to_string(report.hint) << "\n";
  out << "n,bmo,bmo_log,vmo_defect,vmo_log_defect\n";
  for (std::size_t i = 0; i < report.resolutions.size(); ++i)
    out << report.resolutions[i] << ',' << format_number(report.bmo[i]) << ','
        << format_number(report.bmo_log[i]) << ',' << format_number(report.vmo_defect[i]) << ','
        << format_number(report.vmo_log_defect[i]) << '\n';
}

void write_growth_csv(const GrowthTable& table, bool timing, std::ostream& out) {
  out << "n,ratio,out_degree" << (timing ? ",wall_time" : "") << '\n';
  for (const GrowthRow& row : table) {
    out << row.n << ',' << format_number(row.ratio) << ',' << row.out_degree;
    if (timing) out << ',' << format_number(row.wall_time);
    out << '\n';
  }
}

void write_probe_csv(const ProbeTable& table, std::ostream& out) {
  out << "n,sigma_min\n";
  for (const ProbeRow& row : table) out << row.n << ',' << format_number(row.sigma_min) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fredholm data of Toeplitz operators with piecewise continuous symbols", "pctoeplitz"};
  app.require_subcommand(1);

  std::string file, output, format = "csv", lambda_text = "0,0", experiment;
  double p = 2.0, t = 0.0;
  int resolution = 256;
  bool timing = false;
  std::vector<int> n_list;

  auto* spectrum = app.add_subcommand("spectrum", "essential spectrum as CSV or SVG");
  spectrum->add_option("file", file, "symbol JSON file")->required();
  spectrum->add_option("--p", p, "Hardy space exponent, 1 < p < inf");
  spectrum->add_option("--resolution", resolution, "samples per piece and per arc (>= 16)");
  spectrum->add_option("--out", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  spectrum->add_option("-o,--output", output, "output path (stdout when omitted)");

  auto* index = app.add_subcommand("index", "Fredholm index of T_a - lambda on H^p");
  index->add_option("file", file)->required();
  index->add_option("--p", p);
  index->add_option("--lambda", lambda_text, "re,im");

  auto* verdict = app.add_subcommand("verdict", "boundedness of T_a on H^1");
  verdict->add_option("file", file)->required();

  auto* normalize = app.add_subcommand("normalize", "print the canonical form of a symbol file");
  normalize->add_option("file", file)->required();

  auto* exp = app.add_subcommand("experiment", "growth | probe | indexcheck | lindelof");
  exp->add_option("kind", experiment)->required()->check(CLI::IsMember({"growth", "probe", "indexcheck", "lindelof"}));
  exp->add_option("file", file)->required();
  exp->add_option("--n", n_list, "comma separated sizes")->delimiter(',');
  exp->add_option("--lambda", lambda_text, "re,im");
  exp->add_option("--t", t, "boundary angle in radians (lindelof)");
  exp->add_flag("--timing", timing, "append wall-clock seconds to the growth table");
  exp->add_option("-o,--output", output, "output path (stdout when omitted)");

  std::vector<const char*> argv{"pctoeplitz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    const SymbolFile sf = read_symbol_file(file);
    const PiecewiseSymbol symbol = to_symbol(sf);

    if (normalize->parsed()) {
      out << serialize_symbol_file(sf);
      return kExitOk;
    }
    if (spectrum->parsed()) {
      check_p(p);
      const SpectrumDescription desc = essential_spectrum(symbol, p, resolution);
      std::ostringstream text;
      if (format == "svg")
        write_spectrum_svg(desc, text);
      else
        write_spectrum_csv(desc, text);
      emit(output, text.str(), out);
      return kExitOk;
    }
    if (index->parsed()) {
      check_p(p);
      const complex lambda = parse_lambda(lambda_text);
      out << fredholm_index(symbol, p, lambda) << '\n';
      return kExitOk;
    }
    if (verdict->parsed()) {
      const H1Verdict v = h1_boundedness_verdict(symbol);
      out << to_string(v.kind) << ": " << v.certificate << '\n';
      if (v.report) write_oscillation_csv(*v.report, out);
      return kExitOk;
    }

    std::ostringstream text;
    text << "# experiment=" << experiment << "\n# file=" << file << '\n';
    if (experiment == "growth") {
      if (n_list.empty()) n_list = {64, 256, 1024, 4096};
      text << "# n=";
      for (std::size_t i = 0; i < n_list.size(); ++i) text << (i ? "," : "") << n_list[i];
      text << "\n# test_function=sum_{k=0}^{n} z^k\n# norm=H1\n";
      write_growth_csv(h1_growth_experiment(symbol, n_list), timing, text);
    } else if (experiment == "probe") {
      if (n_list.empty()) n_list = {32, 64, 128, 256, 512};
      const complex lambda = parse_lambda(lambda_text);
      text << "# lambda=" << format_complex(lambda) << "\n# n=";
      for (std::size_t i = 0; i < n_list.size(); ++i) text << (i ? "," : "") << n_list[i];
      text << '\n';
      write_probe_csv(finite_section_probe(symbol, lambda, n_list), text);
    } else if (experiment == "indexcheck") {
      const complex lambda = parse_lambda(lambda_text);
      text << "# lambda=" << format_complex(lambda) << '\n';
      const IndexConsistencyReport r = index_consistency(symbol, lambda);
      text << "fredholm_index,analytic_index,roots_inside,pole_order,match\n"
           << r.fredholm_index << ',' << r.analytic_index << ',' << r.roots_inside << ','
           << r.pole_order << ',' << (r.match ? "true" : "false") << '\n';
    } else {
      const auto poly = symbol.global_polynomial();
      if (!poly) throw DomainError("lindelof: the symbol file must describe a single polynomial");
      const LindelofReport r = lindelof_demo(*poly, t);
      text << "# t=" << format_number(t) << "\n# left_limit=" << format_complex(r.left_limit)
           << "\n# right_limit=" << format_complex(r.right_limit)
           << "\n# difference=" << format_number(r.difference)
           << "\n# boundary_value=" << format_complex(r.boundary_value) << '\n';
      text << "m,left_re,left_im,right_re,right_im\n";
      for (const auto& row : r.rows)
        text << format_number(row.m) << ',' << format_complex(row.left) << ',' << format_complex(row.right) << '\n';
    }
    emit(output, text.str(), out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InSpectrumError& e) {
    err << e.what() << '\n';
    return kExitInSpectrum;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace pctoeplitz::cli
