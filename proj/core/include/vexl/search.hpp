#ifndef VEXL_SEARCH_HPP
#define VEXL_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vexl/domain.hpp"
#include "vexl/properties.hpp"

namespace vexl {

/// Mixture weights for exponent draws: an atom at 1, an atom at inf, and a
/// log-uniform part on [1, 10]. Weights are nonnegative and normalized by
/// the sampler.
struct ExponentWeights {
  double atom_one = 0.25;
  double atom_inf = 0.25;
  double log_uniform = 0.5;
};

/// Optional conditioning of the raw exponent draws so every generated
/// instance lands in one uniform regime (used by the negative-control and
/// property suites). None leaves the mixture unconditioned.
enum class RegimeFilter { None, ConstantQ, QleP, HolderConjugate };

struct GenConfig {
  std::pair<int, int> cell_count_range{1, 8};
  std::pair<int, int> seq_len_range{1, 4};
  ExponentWeights p_weights{};
  ExponentWeights q_weights{};
  std::pair<double, double> value_range{1e-2, 1e2};    // log-uniform
  std::pair<double, double> measure_range{1e-1, 1e1};  // log-uniform
  RegimeFilter regime_filter = RegimeFilter::None;
  std::uint64_t seed = 0;

  void validate() const;
};

/// The two-cell counterexample: unit measures, p == 1, q = (1, inf),
/// f = (chi_0, chi_1), g = (chi_1, chi_0). Its norms are (1, 1, 3).
Instance thm2_instance();

/// Same construction with finite q = (1, q0), q0 >= 1.
Instance bounded_q_instance(double q0);

struct SweepRow {
  double q0;
  double residual;
};

struct BoundedQSweep {
  std::vector<SweepRow> rows;
  std::optional<std::size_t> first_violation;  // index into rows

  const SweepRow* first_violating_row() const {
    return first_violation ? &rows[*first_violation] : nullptr;
  }
};

/// Triangle residual of bounded_q_instance(q0) over an ascending grid;
/// reports the first q0 whose residual exceeds kViolationThreshold, if any.
BoundedQSweep bounded_q_threshold(std::span<const double> q_grid, double tol = kDefaultTol);

/// Deterministic function of cfg (including cfg.seed).
Instance gen_instance(const GenConfig& cfg);

/// Evaluates the triangle residual on `budget` instances derived per index
/// from cfg.seed, keeps residuals above kViolationThreshold, re-verifies
/// every witness at 10x tighter tolerance and returns them sorted by
/// residual descending (ties broken by instance seed).
std::vector<ViolationWitness> search_violations(const GenConfig& cfg, std::size_t budget);

}  // namespace vexl

#endif  // VEXL_SEARCH_HPP
