#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pctoeplitz/bmo.hpp"
#include "pctoeplitz/experiments.hpp"
#include "pctoeplitz/spectra.hpp"

namespace pctoeplitz::cli {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInSpectrum = 4;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form.
std::string format_number(double v);

void write_spectrum_csv(const SpectrumDescription& spectrum, std::ostream& out);
void write_spectrum_svg(const SpectrumDescription& spectrum, std::ostream& out);
void write_oscillation_csv(const OscillationReport& report, std::ostream& out);
void write_growth_csv(const GrowthTable& table, bool timing, std::ostream& out);
void write_probe_csv(const ProbeTable& table, std::ostream& out);

}  // namespace pctoeplitz::cli
