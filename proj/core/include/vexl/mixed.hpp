#ifndef VEXL_MIXED_HPP
#define VEXL_MIXED_HPP

#include <vector>

#include "vexl/domain.hpp"
#include "vexl/lebesgue.hpp"
#include "vexl/xreal.hpp"

namespace vexl {

enum class InnerBranch { Zero, Finite, Infeasible };

/// Value of one inner infimum lambda_nu, which may degenerate to 0
/// (feasible for every lambda) or +inf (feasible for none).
struct InnerInfimumResult {
  XReal lambda;
  double achieved_accuracy;
  InnerBranch branch;
};

const char* inner_branch_name(InnerBranch b);

/// inf{lambda > 0 : sum_i m_i * phi_{p_i}(f_i / (mu * lambda^{1/q_i})) <= 1},
/// with lambda^{1/inf} := 1. Cells with q = inf contribute a lambda-independent
/// amount; if that alone exceeds 1 the set is empty (Infeasible). If every
/// q-finite cell carries f = 0 the whole constraint is lambda-free and the
/// infimum is 0 (Zero). Otherwise the monotone indicator is bisected.
InnerInfimumResult inner_infimum(const SimpleFunction& f, const ExponentPair& exps,
                                 const Partition& part, double mu, double tol = kDefaultTol);

std::vector<InnerInfimumResult> inner_infima(const FunctionSequence& seq, const ExponentPair& exps,
                                             const Partition& part, double mu,
                                             double tol = kDefaultTol);

/// Mixed modular: sum over nu of the inner infima (at scale mu = 1).
/// +inf as soon as one term is infeasible.
XReal mixed_modular(const FunctionSequence& seq, const ExponentPair& exps, const Partition& part,
                    double tol = kDefaultTol);

/// Mixed norm inf{mu > 0 : mixed_modular(seq/mu) <= 1}. The division by mu is
/// folded into the inner infima; inner bisections run at tol/10.
NormResult mixed_norm_detailed(const FunctionSequence& seq, const ExponentPair& exps,
                               const Partition& part, double tol = kDefaultTol);

XReal mixed_norm(const FunctionSequence& seq, const ExponentPair& exps, const Partition& part,
                 double tol = kDefaultTol);

/// Alternate route for the mixed modular on the domain 1 <= q <= p:
/// sum over nu of the Luxemburg norm of phi_{q(.)}(|f_nu|) under the
/// exponent p(.)/q(.), with p/q := 1 where p = q = inf. Rejects any cell
/// with q > p (in particular p < q = inf, where the identity loses meaning).
XReal mixed_modular_alt(const FunctionSequence& seq, const ExponentPair& exps,
                        const Partition& part, double tol = kDefaultTol);

/// |phi_p(t/lambda^{1/q}) - phi_{p/q}(phi_q(t)/lambda)| for 1 <= q <= p <= inf,
/// with inf on both sides counting as residual 0. Rejects p < q.
double phi_identity_residual(XReal p, XReal q, double lambda, double t);

}  // namespace vexl

#endif  // VEXL_MIXED_HPP
