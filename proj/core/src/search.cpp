#include "vexl/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vexl/rng.hpp"

namespace vexl {

void GenConfig::validate() const {
  auto check_int_range = [](std::pair<int, int> r, const char* what) {
    if (r.first < 1 || r.second < r.first)
      throw std::invalid_argument(std::string("GenConfig: empty or invalid ") + what);
  };
  check_int_range(cell_count_range, "cell_count_range");
  check_int_range(seq_len_range, "seq_len_range");
  auto check_weights = [](const ExponentWeights& w, const char* what) {
    if (w.atom_one < 0 || w.atom_inf < 0 || w.log_uniform < 0 ||
        w.atom_one + w.atom_inf + w.log_uniform <= 0)
      throw std::invalid_argument(std::string("GenConfig: invalid weights for ") + what);
  };
  check_weights(p_weights, "p");
  check_weights(q_weights, "q");
  auto check_pos_range = [](std::pair<double, double> r, const char* what) {
    if (!(r.first > 0) || !(r.second >= r.first) || !std::isfinite(r.second))
      throw std::invalid_argument(std::string("GenConfig: invalid ") + what);
  };
  check_pos_range(value_range, "value_range");
  check_pos_range(measure_range, "measure_range");
}

Instance thm2_instance() { return bounded_q_instance(std::numeric_limits<double>::infinity()); }

Instance bounded_q_instance(double q0) {
  if (!(q0 >= 1.0)) throw std::invalid_argument("bounded_q_instance: needs q0 >= 1");
  Partition part({1.0, 1.0});
  ExponentPair exps({XReal(1.0), XReal(1.0)}, {XReal(1.0), XReal(q0)});
  SimpleFunction chi0({1.0, 0.0});
  SimpleFunction chi1({0.0, 1.0});
  FunctionSequence f({chi0, chi1});
  FunctionSequence g({chi1, chi0});
  return Instance{std::move(part), std::move(exps), std::move(f), std::move(g)};
}

BoundedQSweep bounded_q_threshold(std::span<const double> q_grid, double tol) {
  if (q_grid.empty()) throw std::invalid_argument("bounded_q_threshold: empty grid");
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (!(q_grid[i] >= 1.0))
      throw std::invalid_argument("bounded_q_threshold: grid entries must be >= 1");
    if (i > 0 && !(q_grid[i] > q_grid[i - 1]))
      throw std::invalid_argument("bounded_q_threshold: grid must be ascending");
  }
  BoundedQSweep sweep;
  sweep.rows.reserve(q_grid.size());
  for (double q0 : q_grid) {
    Instance inst = bounded_q_instance(q0);
    double res = triangle_residual(inst.f, inst.g, inst.exponents, inst.partition, tol);
    sweep.rows.push_back(SweepRow{q0, res});
    if (!sweep.first_violation && res > kViolationThreshold)
      sweep.first_violation = sweep.rows.size() - 1;
  }
  return sweep;
}

namespace {

XReal draw_exponent(SplitMix64& rng, const ExponentWeights& w) {
  const double total = w.atom_one + w.atom_inf + w.log_uniform;
  double u = rng.unit() * total;
  if (u < w.atom_one) return XReal(1.0);
  if (u < w.atom_one + w.atom_inf) return XReal::infinity();
  return XReal(rng.log_uniform(1.0, 10.0));
}

double inv(XReal x) { return x.is_inf() ? 0.0 : 1.0 / x.value(); }

// Draw (p_i, q_i) for all cells honoring the regime filter.
void draw_exponents(SplitMix64& rng, const GenConfig& cfg, std::size_t cells,
                    std::vector<XReal>& p, std::vector<XReal>& q) {
  p.clear();
  q.clear();
  switch (cfg.regime_filter) {
    case RegimeFilter::None:
      for (std::size_t i = 0; i < cells; ++i) {
        p.push_back(draw_exponent(rng, cfg.p_weights));
        q.push_back(draw_exponent(rng, cfg.q_weights));
      }
      break;
    case RegimeFilter::ConstantQ: {
      XReal qc = draw_exponent(rng, cfg.q_weights);  // one q for every cell
      for (std::size_t i = 0; i < cells; ++i) {
        p.push_back(draw_exponent(rng, cfg.p_weights));
        q.push_back(qc);
      }
      break;
    }
    case RegimeFilter::QleP:
      for (std::size_t i = 0; i < cells; ++i) {
        XReal a = draw_exponent(rng, cfg.p_weights);
        XReal b = draw_exponent(rng, cfg.q_weights);
        if (b > a) std::swap(a, b);  // order the pair so q <= p
        p.push_back(a);
        q.push_back(b);
      }
      break;
    case RegimeFilter::HolderConjugate:
      for (std::size_t i = 0; i < cells; ++i) {
        XReal a = draw_exponent(rng, cfg.p_weights);
        XReal b = draw_exponent(rng, cfg.q_weights);
        for (int attempt = 0; attempt < 64 && inv(a) + inv(b) > 1.0; ++attempt) {
          a = draw_exponent(rng, cfg.p_weights);
          b = draw_exponent(rng, cfg.q_weights);
        }
        if (inv(a) + inv(b) > 1.0) b = XReal::infinity();  // 1/p <= 1 always holds
        p.push_back(a);
        q.push_back(b);
      }
      break;
  }
}

FunctionSequence draw_sequence(SplitMix64& rng, const GenConfig& cfg, std::size_t cells,
                               std::size_t len) {
  std::vector<SimpleFunction> terms;
  terms.reserve(len);
  for (std::size_t nu = 0; nu < len; ++nu) {
    std::vector<double> v(cells);
    for (std::size_t i = 0; i < cells; ++i)
      v[i] = rng.log_uniform(cfg.value_range.first, cfg.value_range.second);
    terms.emplace_back(std::move(v));
  }
  return FunctionSequence(std::move(terms));
}

}  // namespace

Instance gen_instance(const GenConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);

  const std::size_t cells = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::uint64_t>(cfg.cell_count_range.first),
      static_cast<std::uint64_t>(cfg.cell_count_range.second)));
  std::vector<double> measures(cells);
  for (auto& m : measures) m = rng.log_uniform(cfg.measure_range.first, cfg.measure_range.second);
  Partition part(std::move(measures));

  std::vector<XReal> p, q;
  draw_exponents(rng, cfg, cells, p, q);
  ExponentPair exps(std::move(p), std::move(q));

  const std::size_t len = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::uint64_t>(cfg.seq_len_range.first),
      static_cast<std::uint64_t>(cfg.seq_len_range.second)));
  FunctionSequence f = draw_sequence(rng, cfg, cells, len);
  FunctionSequence g = draw_sequence(rng, cfg, cells, len);
  return Instance{std::move(part), std::move(exps), std::move(f), std::move(g)};
}

std::vector<ViolationWitness> search_violations(const GenConfig& cfg, std::size_t budget) {
  cfg.validate();
  if (budget < 1) throw std::invalid_argument("search_violations: budget must be >= 1");

  std::vector<ViolationWitness> witnesses;
  for (std::size_t idx = 0; idx < budget; ++idx) {
    GenConfig instance_cfg = cfg;
    instance_cfg.seed = derive_seed(cfg.seed, idx);
    Instance inst = gen_instance(instance_cfg);
    double res = triangle_residual(inst.f, inst.g, inst.exponents, inst.partition, kDefaultTol);
    if (res <= kViolationThreshold) continue;

    // Re-verify at 10x tighter tolerance before certifying.
    const double tight = kDefaultTol / 10.0;
    double nf = mixed_norm(inst.f, inst.exponents, inst.partition, tight).value();
    double ng = mixed_norm(inst.g, inst.exponents, inst.partition, tight).value();
    double ns =
        mixed_norm(add(inst.f, inst.g), inst.exponents, inst.partition, tight).value();
    double verified = ns - nf - ng;
    if (verified <= kViolationThreshold / 2) continue;
    witnesses.push_back(
        ViolationWitness{std::move(inst), nf, ng, ns, verified, instance_cfg.seed});
  }
  std::sort(witnesses.begin(), witnesses.end(), [](const auto& a, const auto& b) {
    if (a.residual != b.residual) return a.residual > b.residual;
    return a.instance_seed < b.instance_seed;
  });
  return witnesses;
}

}  // namespace vexl
