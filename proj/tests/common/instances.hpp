#ifndef VEXL_TESTS_INSTANCES_HPP
#define VEXL_TESTS_INSTANCES_HPP

// Instance builders and normalizers shared by the unit and acceptance
// suites. Absolute residual thresholds are meaningful only when the
// quantities compared are O(1), so suites rescale generated instances
// before asserting.

#include <algorithm>
#include <vector>

#include "vexl/domain.hpp"
#include "vexl/mixed.hpp"
#include "vexl/rng.hpp"
#include "vexl/search.hpp"

namespace vexl::test {

inline Partition unit_cells(std::size_t n) {
  return Partition(std::vector<double>(n, 1.0));
}

inline std::vector<XReal> constant_exponent(std::size_t n, double v) {
  return std::vector<XReal>(n, XReal(v));
}

/// Scale a sequence to unit mixed norm, then by `target`. No-op for zero
/// sequences.
inline FunctionSequence normalized(const FunctionSequence& seq, const ExponentPair& exps,
                                   const Partition& part, double target = 1.0) {
  double n = mixed_norm(seq, exps, part).value();
  if (n == 0.0) return seq;
  return scaled(seq, target / n);
}

/// Shrink a sequence until its mixed modular is at most `cap` (keeps
/// modular-level comparisons inside the absolute-threshold regime).
inline FunctionSequence shrunk_to_modular(FunctionSequence seq, const ExponentPair& exps,
                                          const Partition& part, double cap = 2.0) {
  for (int k = 0; k < 400; ++k) {
    XReal m = mixed_modular(seq, exps, part);
    if (!m.is_inf() && m.value() <= cap) break;
    seq = scaled(seq, 0.7);
  }
  return seq;
}

/// Config whose draws stay in one uniform regime. Weights keep the atoms at
/// 1 and inf in play so the degenerate branches are exercised.
inline GenConfig regime_config(RegimeFilter filter, std::uint64_t seed) {
  GenConfig cfg;
  cfg.cell_count_range = {1, 6};
  cfg.seq_len_range = {1, 4};
  cfg.p_weights = {0.2, 0.2, 0.6};
  cfg.q_weights = {0.2, 0.2, 0.6};
  cfg.value_range = {0.1, 2.0};
  cfg.measure_range = {0.5, 2.0};
  cfg.regime_filter = filter;
  cfg.seed = seed;
  return cfg;
}

/// Config reaching the q in {1, inf}, p == 1 mixtures where violations live.
inline GenConfig mixture_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.cell_count_range = {2, 4};
  cfg.seq_len_range = {2, 4};
  cfg.p_weights = {1.0, 0.0, 0.0};  // p == 1 everywhere
  cfg.q_weights = {0.45, 0.45, 0.1};
  cfg.regime_filter = RegimeFilter::None;
  cfg.seed = seed;
  return cfg;
}

}  // namespace vexl::test

#endif  // VEXL_TESTS_INSTANCES_HPP
