#pragma once

#include <vector>

#include "pctoeplitz/coefficients.hpp"
#include "pctoeplitz/symbol.hpp"

namespace pctoeplitz {

inline constexpr int kMaxGrowthDegree = 1 << 15;
inline constexpr int kMaxProbeSize = 2048;

/// a(t) = +1 on [0, pi), -1 on [pi, 2*pi).
PiecewiseSymbol sign_symbol();

/// 1 / log(8 / |e^{i theta} - 1|), continuous with value 0 at theta = 0.
double lip_log_exemplar(double theta);

/// Truncation of lip_log_exemplar to degree `degree`, coefficients from a
/// `samples`-point FFT.
PiecewiseSymbol lip_log_exemplar_symbol(int degree = 64, int samples = 1 << 16);

struct GrowthRow {
  int n = 0;
  double ratio = 0.0;      // ||T_a f_n||_{H^1} / ||f_n||_{H^1}
  int out_degree = 0;      // truncation of T_a f_n actually used
  double wall_time = 0.0;  // seconds; not part of the deterministic output
};

using GrowthTable = std::vector<GrowthRow>;

/// H^1 norm growth of T_a on f_n = 1 + z + ... + z^n. The output degree is
/// doubled until the H^1 norm of T_a f_n moves by less than `tail_tolerance`
/// (relative). Throws BudgetError for n > 2^15.
GrowthTable h1_growth_experiment(const PiecewiseSymbol& symbol, const std::vector<int>& n_list,
                                 double tail_tolerance = 1e-3);

struct ProbeRow {
  int n = 0;
  double sigma_min = 0.0;
};

using ProbeTable = std::vector<ProbeRow>;

/// Smallest singular value of the n x n section of a - lambda.
ProbeTable finite_section_probe(const PiecewiseSymbol& symbol, complex lambda,
                                const std::vector<int>& n_list);

struct IndexConsistencyReport {
  int fredholm_index = 0;
  int analytic_index = 0;  // -(roots of z^{-k_min}(a - lambda) in the disk + k_min)
  int roots_inside = 0;
  int pole_order = 0;
  bool match = false;
};

/// Compares the arc-completed winding index with the root count of the
/// shifted trigonometric polynomial. Throws NotTrigPolynomialError and
/// InSpectrumError.
IndexConsistencyReport index_consistency(const PiecewiseSymbol& symbol, complex lambda);

struct LindelofRow {
  double m = 0.0;
  complex left;   // f((1 - 1/m) e^{i(t - 1/m)})
  complex right;  // f((1 - 1/m) e^{i(t + 1/m)})
};

struct LindelofReport {
  std::vector<LindelofRow> rows;
  complex left_limit;
  complex right_limit;
  double difference = 0.0;
  complex boundary_value;  // f(e^{it})
};

/// Default approach ladder m = 10, 10^1.5, ..., 10^4.
std::vector<double> lindelof_ladder();

/// Tangential approach to e^{it} from both sides; limits are extrapolated
/// to 1/m -> 0 by polynomial (Neville) extrapolation over the ladder.
LindelofReport lindelof_demo(const CoefficientSequence& analytic, double t,
                             const std::vector<double>& ladder = lindelof_ladder());

}  // namespace pctoeplitz
