#ifndef VEXL_DOMAIN_HPP
#define VEXL_DOMAIN_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vexl/xreal.hpp"

namespace vexl {

struct Cell {
  std::size_t id;
  double measure;
};

/// Finite partition of the domain into disjoint measurable pieces.
/// Every quantity in this library depends on the domain only through
/// the cell measures, so this is the whole domain abstraction.
class Partition {
 public:
  explicit Partition(std::vector<double> measures) {
    if (measures.empty()) throw std::invalid_argument("Partition: needs at least one cell");
    cells_.reserve(measures.size());
    for (std::size_t i = 0; i < measures.size(); ++i) {
      double m = measures[i];
      if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("Partition: cell " + std::to_string(i) +
                                    " has non-positive or non-finite measure");
      cells_.push_back(Cell{i, m});
    }
  }

  std::size_t cell_count() const { return cells_.size(); }
  double measure(std::size_t i) const { return cells_[i].measure; }
  const std::vector<Cell>& cells() const { return cells_; }

 private:
  std::vector<Cell> cells_;
};

/// Per-cell values of the integrability exponent p and summability
/// exponent q, each in (0, inf].
class ExponentPair {
 public:
  ExponentPair(std::vector<XReal> p, std::vector<XReal> q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.empty() || p_.size() != q_.size())
      throw std::invalid_argument("ExponentPair: p and q must be nonempty and aligned");
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (!(p_[i] > XReal(0.0)))
        throw std::invalid_argument("ExponentPair: p must be positive on cell " + std::to_string(i));
      if (!(q_[i] > XReal(0.0)))
        throw std::invalid_argument("ExponentPair: q must be positive on cell " + std::to_string(i));
    }
  }

  std::size_t cell_count() const { return p_.size(); }
  XReal p(std::size_t i) const { return p_[i]; }
  XReal q(std::size_t i) const { return q_[i]; }
  std::span<const XReal> p() const { return p_; }
  std::span<const XReal> q() const { return q_; }

  XReal p_minus() const { return min_of(p_); }
  XReal q_minus() const { return min_of(q_); }
  XReal p_plus() const { return max_of(p_); }
  XReal q_plus() const { return max_of(q_); }

 private:
  static XReal min_of(const std::vector<XReal>& v) {
    XReal m = v.front();
    for (XReal x : v)
      if (x < m) m = x;
    return m;
  }
  static XReal max_of(const std::vector<XReal>& v) {
    XReal m = v.front();
    for (XReal x : v)
      if (x > m) m = x;
    return m;
  }

  std::vector<XReal> p_, q_;
};

/// Piecewise-constant |f| on a partition: one finite value >= 0 per cell.
class SimpleFunction {
 public:
  explicit SimpleFunction(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      double v = values_[i];
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument("SimpleFunction: value on cell " + std::to_string(i) +
                                    " must be finite and >= 0");
    }
  }

  static SimpleFunction zero(std::size_t cells) {
    return SimpleFunction(std::vector<double>(cells, 0.0));
  }

  std::size_t cell_count() const { return values_.size(); }
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool is_zero() const {
    for (double v : values_)
      if (v != 0.0) return false;
    return true;
  }

 private:
  std::vector<double> values_;
};

/// Finitely supported sequence (f_0, ..., f_K) of simple functions on a
/// shared partition; indices beyond K are implicitly zero.
class FunctionSequence {
 public:
  FunctionSequence() = default;

  explicit FunctionSequence(std::vector<SimpleFunction> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i].cell_count() != terms_[0].cell_count())
        throw std::invalid_argument("FunctionSequence: term " + std::to_string(i) +
                                    " not aligned with term 0");
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const SimpleFunction& term(std::size_t nu) const { return terms_[nu]; }
  const std::vector<SimpleFunction>& terms() const { return terms_; }

  bool is_zero() const {
    for (const auto& t : terms_)
      if (!t.is_zero()) return false;
    return true;
  }

 private:
  std::vector<SimpleFunction> terms_;
};

/// One problem instance: a partition, exponents on it and two sequences.
struct Instance {
  Partition partition;
  ExponentPair exponents;
  FunctionSequence f;
  FunctionSequence g;
};

inline void require_aligned(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": cell counts differ");
}

inline SimpleFunction add(const SimpleFunction& a, const SimpleFunction& b) {
  require_aligned(a.cell_count(), b.cell_count(), "add(SimpleFunction)");
  std::vector<double> v(a.cell_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.value(i) + b.value(i);
  return SimpleFunction(std::move(v));
}

inline SimpleFunction scaled(const SimpleFunction& f, double c) {
  std::vector<double> v(f.cell_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f.value(i);
  return SimpleFunction(std::move(v));
}

/// Termwise cellwise sum; the shorter sequence is padded with zero terms.
inline FunctionSequence add(const FunctionSequence& a, const FunctionSequence& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  require_aligned(a.term(0).cell_count(), b.term(0).cell_count(), "add(FunctionSequence)");
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<SimpleFunction> terms;
  terms.reserve(n);
  for (std::size_t nu = 0; nu < n; ++nu) {
    if (nu < a.size() && nu < b.size()) {
      terms.push_back(add(a.term(nu), b.term(nu)));
    } else if (nu < a.size()) {
      terms.push_back(a.term(nu));
    } else {
      terms.push_back(b.term(nu));
    }
  }
  return FunctionSequence(std::move(terms));
}

inline FunctionSequence scaled(const FunctionSequence& s, double c) {
  std::vector<SimpleFunction> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) terms.push_back(scaled(t, c));
  return FunctionSequence(std::move(terms));
}

}  // namespace vexl

#endif  // VEXL_DOMAIN_HPP
