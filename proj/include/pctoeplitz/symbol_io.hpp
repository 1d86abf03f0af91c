#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pctoeplitz/symbol.hpp"

namespace pctoeplitz {

// JSON symbol files:
//   {"pieces": [{"start_deg": 0, "end_deg": 180,
//                "coeffs": [{"k": 0, "re": 1, "im": 0}, ...]}, ...]}

struct FileCoefficient {
  int k = 0;
  double re = 0.0;
  double im = 0.0;
};

struct FilePiece {
  double start_deg = 0.0;
  double end_deg = 360.0;
  std::vector<FileCoefficient> coeffs;
};

struct SymbolFile {
  std::vector<FilePiece> pieces;
};

/// Throws ParseError on malformed JSON or schema violations. The result is
/// normalised: start in [0, 360), end in (0, 360], pieces sorted by start,
/// coefficients sorted by k.
SymbolFile parse_symbol_file(std::string_view json);

SymbolFile read_symbol_file(const std::string& path);

/// Canonical JSON with 17 significant digits.
std::string serialize_symbol_file(const SymbolFile& file);

/// Builds the symbol (degrees converted to radians). Partition errors are
/// reported as ParseError.
PiecewiseSymbol to_symbol(const SymbolFile& file);

/// Inverse of to_symbol up to the degree/radian conversion.
SymbolFile to_symbol_file(const PiecewiseSymbol& symbol);

}  // namespace pctoeplitz
