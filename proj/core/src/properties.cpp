#include "vexl/properties.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vexl/rng.hpp"

namespace vexl {

const char* regime_name(RegimeKind k) {
  switch (k) {
    case RegimeKind::ConstantQ:
      return "constant_q";
    case RegimeKind::QleP:
      return "q_le_p";
    case RegimeKind::HolderConjugate:
      return "holder_conjugate";
    case RegimeKind::NoneUniform:
      return "none_uniform";
  }
  return "?";
}

namespace {

double reciprocal(XReal x) { return x.is_inf() ? 0.0 : 1.0 / x.value(); }

}  // namespace

bool regime_holds_on_cell(RegimeKind kind, XReal p, XReal q, XReal q_ref) {
  switch (kind) {
    case RegimeKind::ConstantQ:
      return p >= XReal(1.0) && q == q_ref && q_ref >= XReal(1.0);
    case RegimeKind::QleP:
      return q >= XReal(1.0) && q <= p;
    case RegimeKind::HolderConjugate:
      return reciprocal(p) + reciprocal(q) <= 1.0;
    case RegimeKind::NoneUniform:
      return false;
  }
  return false;
}

Regime classify_regime(const ExponentPair& exps) {
  const RegimeKind order[] = {RegimeKind::ConstantQ, RegimeKind::QleP,
                              RegimeKind::HolderConjugate};
  const XReal q_ref = exps.q(0);
  std::vector<std::size_t> witnesses;
  for (RegimeKind kind : order) {
    bool holds = true;
    for (std::size_t i = 0; i < exps.cell_count(); ++i) {
      if (!regime_holds_on_cell(kind, exps.p(i), exps.q(i), q_ref)) {
        witnesses.push_back(i);  // first cell breaking this regime
        holds = false;
        break;
      }
    }
    if (holds) return Regime{kind, {}};
  }
  return Regime{RegimeKind::NoneUniform, std::move(witnesses)};
}

double triangle_residual(const FunctionSequence& f, const FunctionSequence& g,
                         const ExponentPair& exps, const Partition& part, double tol) {
  FunctionSequence sum = add(f, g);
  double nf = mixed_norm(f, exps, part, tol).value();
  double ng = mixed_norm(g, exps, part, tol).value();
  double ns = mixed_norm(sum, exps, part, tol).value();
  return ns - nf - ng;
}

double convexity_residual(const FunctionSequence& a, const FunctionSequence& b, double theta,
                          const ExponentPair& exps, const Partition& part, double tol) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("convexity_residual: theta must lie in [0, 1]");
  FunctionSequence combo = add(scaled(a, theta), scaled(b, 1.0 - theta));
  XReal lhs = mixed_modular(combo, exps, part, tol);
  XReal rhs = XReal(theta) * mixed_modular(a, exps, part, tol) +
              XReal(1.0 - theta) * mixed_modular(b, exps, part, tol);
  if (rhs.is_inf()) return 0.0;  // nothing to violate against
  if (lhs.is_inf()) return std::numeric_limits<double>::infinity();
  return lhs.value() - rhs.value();
}

double holder_form_residual(HolderKind kind, XReal p, XReal q, double mu1, double mu2, double lam,
                            double Lam, double F, double G) {
  if (p.is_inf()) throw std::invalid_argument("holder_form_residual: needs p < inf");
  const double pv = p.value();
  const double inv_p = 1.0 / pv;
  const double inv_q = reciprocal(q);
  if (kind == HolderKind::Hol1) {
    if (!(q >= XReal(1.0)) || q > p)
      throw std::invalid_argument("holder_form_residual: Hol1 needs 1 <= q <= p < inf");
  } else {
    if (!(inv_p + inv_q <= 1.0))
      throw std::invalid_argument("holder_form_residual: Hol2 needs 1/p + 1/q <= 1");
  }
  if (!(mu1 >= 0.0) || !(mu2 >= 0.0) || !(mu1 + mu2 > 0.0))
    throw std::invalid_argument("holder_form_residual: needs mu1, mu2 >= 0, mu1 + mu2 > 0");
  if (!(lam > 0.0) || !(Lam > 0.0))
    throw std::invalid_argument("holder_form_residual: needs lam, Lam > 0");
  if (!(F >= 0.0) || !(G >= 0.0))
    throw std::invalid_argument("holder_form_residual: needs F, G >= 0");

  const double lhs = std::pow(F, inv_p) * std::pow(lam, inv_q) * mu1 +
                     std::pow(G, inv_p) * std::pow(Lam, inv_q) * mu2;
  double rhs;
  if (kind == HolderKind::Hol1) {
    rhs = std::pow(mu1 + mu2, 1.0 - inv_q) * std::pow(mu1 * lam + mu2 * Lam, inv_q - inv_p) *
          std::pow(F * lam * mu1 + G * Lam * mu2, inv_p);
  } else {
    rhs = std::pow(mu1 + mu2, 1.0 - inv_p - inv_q) * std::pow(mu1 * lam + mu2 * Lam, inv_q) *
          std::pow(F * mu1 + G * mu2, inv_p);
  }
  return std::max(0.0, lhs - rhs);
}

IdentityFuzzReport run_identity_fuzz(std::uint64_t seed, std::size_t samples, double threshold) {
  SplitMix64 rng(seed);
  IdentityFuzzReport report;
  report.samples = samples;
  report.threshold = threshold;

  auto record = [&](double residual, double& max_r, std::size_t& failures) {
    if (residual > max_r) max_r = residual;
    if (residual > threshold) ++failures;
  };

  for (std::size_t k = 0; k < samples; ++k) {
    // phi identity over 1 <= q <= p <= inf, with both conventions in play.
    // t crosses the phi_inf knee at 1 and lambda crosses 1.
    double u = rng.unit();
    XReal p, q;
    if (u < 0.15) {
      p = XReal::infinity();
      q = XReal::infinity();
    } else if (u < 0.3) {
      p = XReal::infinity();
      q = XReal(rng.log_uniform(1.0, 10.0));
    } else {
      q = XReal(rng.log_uniform(1.0, 10.0));
      p = XReal(q.value() * rng.log_uniform(1.0, 10.0 / q.value()));
    }
    double lambda = rng.log_uniform(0.75, 1.3);
    double t = rng.unit() < 0.1 ? 0.0 : rng.log_uniform(0.05, 1.25);
    record(phi_identity_residual(p, q, lambda, t), report.max_phi_residual, report.phi_failures);

    double mu1 = rng.log_uniform(0.3, 3.0);
    double mu2 = rng.unit() < 0.05 ? 0.0 : rng.log_uniform(0.3, 3.0);
    double lam = rng.log_uniform(0.3, 3.0);
    double Lam = rng.log_uniform(0.3, 3.0);
    double F = rng.unit() < 0.1 ? 0.0 : rng.log_uniform(0.01, 3.0);
    double G = rng.unit() < 0.1 ? 0.0 : rng.log_uniform(0.01, 3.0);

    double q1 = rng.log_uniform(1.0, 10.0);
    double p1 = q1 * rng.log_uniform(1.0, 10.0 / q1);
    record(holder_form_residual(HolderKind::Hol1, XReal(p1), XReal(q1), mu1, mu2, lam, Lam, F, G),
           report.max_hol1_residual, report.hol1_failures);

    double inv_p = 0.1 + 0.85 * rng.unit();
    double inv_q = 0.999 * rng.unit() * (1.0 - inv_p);
    XReal q2 = inv_q < 1e-3 ? XReal::infinity() : XReal(1.0 / inv_q);
    record(holder_form_residual(HolderKind::Hol2, XReal(1.0 / inv_p), q2, mu1, mu2, lam, Lam, F, G),
           report.max_hol2_residual, report.hol2_failures);
  }
  return report;
}

}  // namespace vexl
