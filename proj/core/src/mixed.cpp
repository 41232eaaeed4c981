#include "vexl/mixed.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vexl {

const char* inner_branch_name(InnerBranch b) {
  switch (b) {
    case InnerBranch::Zero:
      return "zero";
    case InnerBranch::Finite:
      return "finite";
    case InnerBranch::Infeasible:
      return "infeasible";
  }
  return "?";
}

namespace {

// Modular of cellwise f_i / (mu * lambda^{1/q_i}) restricted to q-finite
// cells. The q = inf cells are lambda-independent and accounted separately.
XReal q_finite_part(const SimpleFunction& f, const ExponentPair& exps, const Partition& part,
                    double mu, double lambda) {
  XReal total(0.0);
  for (std::size_t i = 0; i < part.cell_count(); ++i) {
    if (exps.q(i).is_inf()) continue;
    if (f.value(i) == 0.0) continue;
    double scale = mu * std::pow(lambda, 1.0 / exps.q(i).value());
    total += XReal(part.measure(i)) * phi_ext(exps.p(i), XReal(f.value(i) / scale));
    if (total.is_inf()) return total;
  }
  return total;
}

}  // namespace

InnerInfimumResult inner_infimum(const SimpleFunction& f, const ExponentPair& exps,
                                 const Partition& part, double mu, double tol) {
  require_aligned(f.cell_count(), part.cell_count(), "inner_infimum");
  require_aligned(exps.cell_count(), part.cell_count(), "inner_infimum(exponents)");
  if (!(mu > 0.0) || std::isnan(mu)) throw std::invalid_argument("inner_infimum: mu must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("inner_infimum: tol must be positive");

  // lambda-independent contribution of the q = inf cells (lambda^{1/inf} := 1).
  XReal fixed(0.0);
  for (std::size_t i = 0; i < part.cell_count(); ++i) {
    if (!exps.q(i).is_inf()) continue;
    fixed += XReal(part.measure(i)) * phi_ext(exps.p(i), XReal(f.value(i) / mu));
    if (fixed.is_inf()) break;
  }
  if (fixed > XReal(1.0))
    return InnerInfimumResult{XReal::infinity(), 0.0, InnerBranch::Infeasible};

  bool has_active = false;       // some q-finite cell with f > 0
  bool active_all_p_inf = true;  // ... and all such cells have p = inf
  double p_inf_bound = 0.0;      // sup over those cells of (f_i/mu)^{q_i}
  for (std::size_t i = 0; i < part.cell_count(); ++i) {
    if (exps.q(i).is_inf() || f.value(i) == 0.0) continue;
    has_active = true;
    if (exps.p(i).is_inf()) {
      p_inf_bound = std::max(p_inf_bound, std::pow(f.value(i) / mu, exps.q(i).value()));
    } else {
      active_all_p_inf = false;
    }
  }

  // Constraint is lambda-free: feasible for every lambda > 0, infimum 0.
  if (!has_active) return InnerInfimumResult{XReal(0.0), 0.0, InnerBranch::Zero};

  if (fixed == XReal(1.0)) {
    // No room left for the q-finite cells. A p-finite one contributes a
    // strictly positive amount at every lambda; p = inf ones vanish exactly
    // once lambda reaches their closed-form bound.
    if (!active_all_p_inf)
      return InnerInfimumResult{XReal::infinity(), 0.0, InnerBranch::Infeasible};
    return InnerInfimumResult{XReal(p_inf_bound), 0.0, InnerBranch::Finite};
  }

  NormResult r = detail::bisect_threshold(
      [&](double lambda) { return fixed + q_finite_part(f, exps, part, mu, lambda) <= XReal(1.0); },
      tol);
  return InnerInfimumResult{r.value, r.achieved_accuracy,
                            r.value.is_inf() ? InnerBranch::Infeasible : InnerBranch::Finite};
}

std::vector<InnerInfimumResult> inner_infima(const FunctionSequence& seq, const ExponentPair& exps,
                                             const Partition& part, double mu, double tol) {
  std::vector<InnerInfimumResult> out;
  out.reserve(seq.size());
  for (const auto& term : seq.terms()) out.push_back(inner_infimum(term, exps, part, mu, tol));
  return out;
}

namespace {

// Sum of inner infima at scale mu; +inf as soon as one term is infeasible.
XReal modular_at_scale(const FunctionSequence& seq, const ExponentPair& exps,
                       const Partition& part, double mu, double tol) {
  XReal total(0.0);
  for (const auto& term : seq.terms()) {
    InnerInfimumResult r = inner_infimum(term, exps, part, mu, tol);
    if (r.branch == InnerBranch::Infeasible) return XReal::infinity();
    total += r.lambda;
  }
  return total;
}

}  // namespace

XReal mixed_modular(const FunctionSequence& seq, const ExponentPair& exps, const Partition& part,
                    double tol) {
  return modular_at_scale(seq, exps, part, 1.0, tol);
}

NormResult mixed_norm_detailed(const FunctionSequence& seq, const ExponentPair& exps,
                               const Partition& part, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("mixed_norm: tol must be positive");
  if (seq.is_zero()) return NormResult{XReal(0.0), 0.0, 0};
  require_aligned(seq.term(0).cell_count(), part.cell_count(), "mixed_norm");
  const double inner_tol = tol / 10.0;  // keeps the outer answer within tol
  return detail::bisect_threshold(
      [&](double mu) { return modular_at_scale(seq, exps, part, mu, inner_tol) <= XReal(1.0); },
      tol);
}

XReal mixed_norm(const FunctionSequence& seq, const ExponentPair& exps, const Partition& part,
                 double tol) {
  return mixed_norm_detailed(seq, exps, part, tol).value;
}

namespace {

// p/q with the convention p/q = 1 when p = q = inf.
XReal exponent_ratio(XReal p, XReal q) {
  if (p.is_inf() && q.is_inf()) return XReal(1.0);
  if (p.is_inf()) return XReal::infinity();
  return XReal(p.value() / q.value());
}

}  // namespace

XReal mixed_modular_alt(const FunctionSequence& seq, const ExponentPair& exps,
                        const Partition& part, double tol) {
  require_aligned(exps.cell_count(), part.cell_count(), "mixed_modular_alt(exponents)");
  std::vector<XReal> ratio;
  ratio.reserve(exps.cell_count());
  for (std::size_t i = 0; i < exps.cell_count(); ++i) {
    XReal p = exps.p(i), q = exps.q(i);
    if (!(q >= XReal(1.0)) || q > p)
      throw std::invalid_argument("mixed_modular_alt: needs 1 <= q <= p on cell " +
                                  std::to_string(i));
    ratio.push_back(exponent_ratio(p, q));
  }

  XReal total(0.0);
  for (const auto& term : seq.terms()) {
    require_aligned(term.cell_count(), part.cell_count(), "mixed_modular_alt");
    // phi_{q_i}(f_i) jumps to +inf on q = inf cells with f_i > 1; any such
    // cell makes the term's norm (and the whole sum) infinite.
    std::vector<double> transformed(part.cell_count());
    bool infinite = false;
    for (std::size_t i = 0; i < part.cell_count(); ++i) {
      XReal v = phi(exps.q(i), term.value(i));
      if (v.is_inf()) {
        infinite = true;
        break;
      }
      transformed[i] = v.value();
    }
    if (infinite) return XReal::infinity();
    total += luxemburg_norm(SimpleFunction(std::move(transformed)), ratio, part, tol);
    if (total.is_inf()) return total;
  }
  return total;
}

double phi_identity_residual(XReal p, XReal q, double lambda, double t) {
  if (!(q >= XReal(1.0))) throw std::invalid_argument("phi_identity_residual: needs q >= 1");
  if (q > p) throw std::invalid_argument("phi_identity_residual: needs q <= p");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("phi_identity_residual: lambda must be positive and finite");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("phi_identity_residual: t must be finite and >= 0");

  const double lam_root = q.is_inf() ? 1.0 : std::pow(lambda, 1.0 / q.value());
  XReal lhs = phi_ext(p, XReal(t / lam_root));

  XReal inner = phi(q, t);
  XReal rhs_arg = inner.is_inf() ? XReal::infinity() : XReal(inner.value() / lambda);
  XReal rhs = phi_ext(exponent_ratio(p, q), rhs_arg);

  if (lhs.is_inf() && rhs.is_inf()) return 0.0;
  return std::abs(lhs.value() - rhs.value());
}

}  // namespace vexl
