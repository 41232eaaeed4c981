#ifndef VEXL_PROPERTIES_HPP
#define VEXL_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vexl/domain.hpp"
#include "vexl/mixed.hpp"
#include "vexl/xreal.hpp"

namespace vexl {

/// Residuals above this certify a genuine violation; below it they are
/// bisection/rounding noise. Six orders of magnitude separate it from the
/// noise floor (~10 * kDefaultTol) and from the known violation (~1).
inline constexpr double kViolationThreshold = 1e-7;

enum class RegimeKind { ConstantQ, QleP, HolderConjugate, NoneUniform };

const char* regime_name(RegimeKind k);

/// Classification of an exponent pair against the three sufficient norm
/// regimes. A regime must hold on every cell simultaneously; a per-cell
/// mixture of different regimes classifies as NoneUniform, with one
/// violating cell recorded per regime as witness.
struct Regime {
  RegimeKind kind;
  std::vector<std::size_t> witness_cells;  // nonempty only for NoneUniform
};

/// Per-cell predicate of one regime. q_ref is the reference q for ConstantQ
/// (ignored by the other kinds).
bool regime_holds_on_cell(RegimeKind kind, XReal p, XReal q, XReal q_ref);

/// First matching regime in the order ConstantQ, QleP, HolderConjugate;
/// NoneUniform when no single condition holds on all cells.
Regime classify_regime(const ExponentPair& exps);

/// mixed_norm(f+g) - mixed_norm(f) - mixed_norm(g); positive values beyond
/// kViolationThreshold certify a triangle-inequality failure.
double triangle_residual(const FunctionSequence& f, const FunctionSequence& g,
                         const ExponentPair& exps, const Partition& part,
                         double tol = kDefaultTol);

/// mixed_modular(theta*a + (1-theta)*b) - theta*mixed_modular(a)
/// - (1-theta)*mixed_modular(b). If the subtracted side is +inf the residual
/// is 0 by convention.
double convexity_residual(const FunctionSequence& a, const FunctionSequence& b, double theta,
                          const ExponentPair& exps, const Partition& part,
                          double tol = kDefaultTol);

enum class HolderKind { Hol1, Hol2 };

/// max(0, LHS - RHS) of the scalar Hoelder-type inequality used pointwise in
/// the norm proof. Hol1 needs 1 <= q <= p < inf:
///   F^{1/p} lam^{1/q} mu1 + G^{1/p} Lam^{1/q} mu2
///     <= (mu1+mu2)^{1-1/q} (mu1 lam + mu2 Lam)^{1/q-1/p} (F lam mu1 + G Lam mu2)^{1/p}
/// Hol2 needs 1/p + 1/q <= 1, p < inf:
///   same LHS <= (mu1+mu2)^{1-1/p-1/q} (mu1 lam + mu2 Lam)^{1/q} (F mu1 + G mu2)^{1/p}
/// mu1, mu2 >= 0 with mu1+mu2 > 0 (0 is an admissible boundary); lam, Lam > 0;
/// F, G >= 0.
double holder_form_residual(HolderKind kind, XReal p, XReal q, double mu1, double mu2, double lam,
                            double Lam, double F, double G);

/// A certified triangle-inequality failure: the instance together with the
/// computed norms and the residual norm_sum - norm_f - norm_g.
struct ViolationWitness {
  Instance instance;
  double norm_f;
  double norm_g;
  double norm_sum;
  double residual;
  std::uint64_t instance_seed;  // seed the instance was generated from
};

struct IdentityFuzzReport {
  std::size_t samples = 0;
  double threshold = 0.0;
  double max_phi_residual = 0.0;
  double max_hol1_residual = 0.0;
  double max_hol2_residual = 0.0;
  std::size_t phi_failures = 0;
  std::size_t hol1_failures = 0;
  std::size_t hol2_failures = 0;

  bool ok() const { return phi_failures + hol1_failures + hol2_failures == 0; }
};

/// Fuzzes phi_identity_residual over 1 <= q <= p <= inf and both Hoelder
/// forms over their regimes, `samples` times each. Parameter ranges are kept
/// moderate so a correct implementation stays below `threshold` (absolute
/// residuals inflate with the magnitude of the compared powers).
IdentityFuzzReport run_identity_fuzz(std::uint64_t seed, std::size_t samples,
                                     double threshold = 1e-12);

}  // namespace vexl

#endif  // VEXL_PROPERTIES_HPP
