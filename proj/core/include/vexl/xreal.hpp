#ifndef VEXL_XREAL_HPP
#define VEXL_XREAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vexl {

/// Nonnegative extended real: a finite double >= 0 or +infinity, never NaN.
///
/// Arithmetic follows the measure-theoretic conventions 0*inf = 0,
/// c*inf = inf for c > 0 and finite + inf = inf. Finite operations that
/// overflow the double range saturate to +infinity.
class XReal {
 public:
  XReal() : v_(0.0) {}

  explicit XReal(double v) : v_(v) {
    if (std::isnan(v)) throw std::invalid_argument("XReal: NaN");
    if (v < 0.0) throw std::invalid_argument("XReal: negative value " + std::to_string(v));
  }

  static XReal infinity() {
    XReal x;
    x.v_ = std::numeric_limits<double>::infinity();
    return x;
  }

  double value() const { return v_; }
  bool is_inf() const { return std::isinf(v_); }
  bool is_zero() const { return v_ == 0.0; }
  bool is_finite() const { return !std::isinf(v_); }

  friend XReal operator+(XReal a, XReal b) {
    XReal r;
    r.v_ = a.v_ + b.v_;  // fin+inf = inf, overflow saturates
    return r;
  }
  XReal& operator+=(XReal o) {
    v_ += o.v_;
    return *this;
  }

  // 0*inf = 0; otherwise IEEE product (saturating on overflow).
  friend XReal operator*(XReal a, XReal b) {
    XReal r;
    if (a.v_ == 0.0 || b.v_ == 0.0) {
      r.v_ = 0.0;
    } else {
      r.v_ = a.v_ * b.v_;
    }
    return r;
  }

  friend bool operator==(XReal a, XReal b) { return a.v_ == b.v_; }
  friend bool operator!=(XReal a, XReal b) { return a.v_ != b.v_; }
  friend bool operator<(XReal a, XReal b) { return a.v_ < b.v_; }
  friend bool operator<=(XReal a, XReal b) { return a.v_ <= b.v_; }
  friend bool operator>(XReal a, XReal b) { return a.v_ > b.v_; }
  friend bool operator>=(XReal a, XReal b) { return a.v_ >= b.v_; }

 private:
  double v_;
};

inline XReal xinf() { return XReal::infinity(); }

}  // namespace vexl

#endif  // VEXL_XREAL_HPP
