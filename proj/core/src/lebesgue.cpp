#include "vexl/lebesgue.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vexl {

XReal phi(XReal p, double t) {
  if (!(p > XReal(0.0))) throw std::invalid_argument("phi: exponent must be positive");
  if (std::isnan(t) || std::isinf(t) || t < 0.0)
    throw std::invalid_argument("phi: argument must be finite and >= 0");
  return phi_ext(p, XReal(t));
}

XReal phi_ext(XReal p, XReal t) {
  if (!(p > XReal(0.0))) throw std::invalid_argument("phi: exponent must be positive");
  if (t.is_inf()) return XReal::infinity();
  if (p.is_inf()) {
    return t.value() <= 1.0 ? XReal(0.0) : XReal::infinity();
  }
  // pow saturates to +inf on overflow, preserving monotonicity.
  return XReal(std::pow(t.value(), p.value()));
}

XReal modular(const SimpleFunction& f, std::span<const XReal> p, const Partition& part,
              double lambda) {
  require_aligned(f.cell_count(), part.cell_count(), "modular");
  require_aligned(p.size(), part.cell_count(), "modular(exponents)");
  if (!(lambda > 0.0)) throw std::invalid_argument("modular: lambda must be positive");
  XReal total(0.0);
  for (std::size_t i = 0; i < part.cell_count(); ++i) {
    XReal term = XReal(part.measure(i)) * phi_ext(p[i], XReal(f.value(i) / lambda));
    total += term;
    if (total.is_inf()) return total;
  }
  return total;
}

NormResult luxemburg_norm_detailed(const SimpleFunction& f, std::span<const XReal> p,
                                   const Partition& part, double tol) {
  require_aligned(f.cell_count(), part.cell_count(), "luxemburg_norm");
  require_aligned(p.size(), part.cell_count(), "luxemburg_norm(exponents)");
  if (!(tol > 0.0)) throw std::invalid_argument("luxemburg_norm: tol must be positive");
  if (f.is_zero()) return NormResult{XReal(0.0), 0.0, 0};
  return detail::bisect_threshold(
      [&](double lambda) { return modular(f, p, part, lambda) <= XReal(1.0); }, tol);
}

XReal luxemburg_norm(const SimpleFunction& f, std::span<const XReal> p, const Partition& part,
                     double tol) {
  return luxemburg_norm_detailed(f, p, part, tol).value;
}

}  // namespace vexl
