#include "pctoeplitz/symbol_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "pctoeplitz/errors.hpp"

namespace pctoeplitz {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) throw ParseError(std::string("missing numeric field \"") + key + "\"");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("non-finite value in \"") + key + "\"");
  return v;
}

double normalize_start(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;
  return r;
}

double normalize_end(double deg) {
  const double r = normalize_start(deg);
  return r == 0.0 ? 360.0 : r;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

SymbolFile parse_symbol_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array())
    throw ParseError("expected an object with a \"pieces\" array");
  if (doc["pieces"].empty()) throw ParseError("\"pieces\" must not be empty");

  SymbolFile file;
  for (const auto& jp : doc["pieces"]) {
    if (!jp.is_object()) throw ParseError("each piece must be an object");
    FilePiece piece;
    piece.start_deg = number_field(jp, "start_deg");
    piece.end_deg = number_field(jp, "end_deg");
    if (piece.start_deg < 0.0 || piece.start_deg > 360.0 || piece.end_deg < 0.0 || piece.end_deg > 360.0)
      throw ParseError("piece angles must lie in [0, 360] degrees");
    piece.start_deg = normalize_start(piece.start_deg);
    piece.end_deg = normalize_end(piece.end_deg);

    auto coeffs = jp.find("coeffs");
    if (coeffs == jp.end() || !coeffs->is_array() || coeffs->empty())
      throw ParseError("each piece needs a nonempty \"coeffs\" array");
    std::map<int, FileCoefficient> by_k;
    for (const auto& jc : *coeffs) {
      if (!jc.is_object()) throw ParseError("each coefficient must be an object");
      auto k = jc.find("k");
      if (k == jc.end() || !k->is_number_integer()) throw ParseError("coefficient needs an integer \"k\"");
      FileCoefficient c;
      c.k = k->get<int>();
      c.re = jc.contains("re") ? number_field(jc, "re") : 0.0;
      c.im = jc.contains("im") ? number_field(jc, "im") : 0.0;
      if (!by_k.emplace(c.k, c).second) throw ParseError("duplicate coefficient index k=" + std::to_string(c.k));
    }
    for (const auto& [k, c] : by_k) piece.coeffs.push_back(c);
    file.pieces.push_back(std::move(piece));
  }
  std::stable_sort(file.pieces.begin(), file.pieces.end(),
                   [](const FilePiece& a, const FilePiece& b) { return a.start_deg < b.start_deg; });
  return file;
}

SymbolFile read_symbol_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open symbol file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_symbol_file(ss.str());
}

std::string serialize_symbol_file(const SymbolFile& file) {
  std::ostringstream out;
  out << "{\n  \"pieces\": [\n";
  for (std::size_t i = 0; i < file.pieces.size(); ++i) {
    const FilePiece& p = file.pieces[i];
    out << "    {\"start_deg\": " << fmt17(p.start_deg) << ", \"end_deg\": " << fmt17(p.end_deg)
        << ", \"coeffs\": [";
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
      const FileCoefficient& c = p.coeffs[j];
      out << (j ? ", " : "") << "{\"k\": " << c.k << ", \"re\": " << fmt17(c.re)
          << ", \"im\": " << fmt17(c.im) << "}";
    }
    out << "]}" << (i + 1 < file.pieces.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

PiecewiseSymbol to_symbol(const SymbolFile& file) {
  std::vector<Piece> pieces;
  for (const FilePiece& fp : file.pieces) {
    if (fp.coeffs.empty()) throw ParseError("piece without coefficients");
    const int k_min = fp.coeffs.front().k;
    const int k_max = fp.coeffs.back().k;
    std::vector<complex> c(static_cast<std::size_t>(k_max - k_min + 1));
    for (const auto& fc : fp.coeffs) c[static_cast<std::size_t>(fc.k - k_min)] = {fc.re, fc.im};
    pieces.push_back({fp.start_deg * kPi / 180.0, fp.end_deg * kPi / 180.0,
                      CoefficientSequence(k_min, std::move(c))});
  }
  try {
    return PiecewiseSymbol::make(std::move(pieces));
  } catch (const OverlapError& e) {
    throw ParseError(std::string("pieces do not partition the circle: ") + e.what());
  } catch (const EmptyError& e) {
    throw ParseError(e.what());
  }
}

SymbolFile to_symbol_file(const PiecewiseSymbol& symbol) {
  SymbolFile file;
  for (const Piece& p : symbol.pieces()) {
    FilePiece fp;
    fp.start_deg = normalize_start(p.start * 180.0 / kPi);
    fp.end_deg = normalize_end(normalize_angle(p.end) * 180.0 / kPi);
    for (int k = p.value.k_min(); k <= p.value.k_max(); ++k) {
      const complex c = p.value[k];
      fp.coeffs.push_back({k, c.real(), c.imag()});
    }
    file.pieces.push_back(std::move(fp));
  }
  return file;
}

}  // namespace pctoeplitz
