#ifndef VEXL_LEBESGUE_HPP
#define VEXL_LEBESGUE_HPP

#include <span>

#include "vexl/domain.hpp"
#include "vexl/xreal.hpp"

namespace vexl {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kMaxBisectIterations = 200;

/// phi_p(t): t^p for finite p; for p = inf, 0 when t <= 1 and inf when t > 1.
/// Rejects p <= 0 and negative or non-finite t.
XReal phi(XReal p, double t);

/// phi extended to extended-real arguments: phi_p(inf) = inf for every p > 0.
XReal phi_ext(XReal p, XReal t);

/// Modular of f/lambda: sum over cells of measure_i * phi_{p_i}(f_i/lambda),
/// with the 0*inf = 0 convention. lambda = 1 gives the plain modular.
XReal modular(const SimpleFunction& f, std::span<const XReal> p, const Partition& part,
              double lambda = 1.0);

struct NormResult {
  XReal value;
  double achieved_accuracy;  // half-width of the final bisection bracket
  int iterations;
};

/// Luxemburg norm inf{lambda > 0 : modular(f/lambda) <= 1} via bisection on
/// the monotone feasibility indicator. Returns 0 exactly for f == 0.
NormResult luxemburg_norm_detailed(const SimpleFunction& f, std::span<const XReal> p,
                                   const Partition& part, double tol = kDefaultTol);

XReal luxemburg_norm(const SimpleFunction& f, std::span<const XReal> p, const Partition& part,
                     double tol = kDefaultTol);

namespace detail {

/// Bisection for inf{x > 0 : feasible(x)} given a monotone non-decreasing
/// indicator. The lower endpoint 0 is a sentinel and never evaluated; the
/// upper endpoint is found by doubling from 1. Stops when the bracket width
/// drops below tol relative to the bracket top (and never below a couple of
/// ulps), capped at kMaxBisectIterations.
template <typename Feasible>
NormResult bisect_threshold(Feasible&& feasible, double tol) {
  double lo = 0.0;
  double hi = 1.0;
  int iters = 0;
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++iters >= kMaxBisectIterations || hi > 1e300)
      return NormResult{XReal::infinity(), 0.0, iters};
  }
  while (iters < kMaxBisectIterations && (hi - lo) > tol * hi) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at ulp scale
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iters;
  }
  return NormResult{XReal(0.5 * (lo + hi)), 0.5 * (hi - lo), iters};
}

}  // namespace detail

}  // namespace vexl

#endif  // VEXL_LEBESGUE_HPP
