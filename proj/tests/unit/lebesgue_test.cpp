#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "../common/instances.hpp"
#include "../common/oracles.hpp"
#include "vexl/lebesgue.hpp"
#include "vexl/rng.hpp"

using namespace vexl;
using test::unit_cells;

namespace {

std::vector<XReal> exps(std::initializer_list<double> vals) {
  std::vector<XReal> out;
  for (double v : vals) out.push_back(XReal(v));
  return out;
}

XReal inf() { return XReal::infinity(); }

}  // namespace

TEST_CASE("phi branches") {
  CHECK(phi(XReal(2.0), 3.0).value() == doctest::Approx(9.0));
  CHECK(phi(inf(), 0.5).is_zero());
  CHECK(phi(inf(), 1.0).is_zero());  // boundary t <= 1
  CHECK(phi(inf(), 2.0).is_inf());
  CHECK(phi(XReal(0.5), 4.0).value() == doctest::Approx(2.0));
  for (double p : {0.5, 1.0, 2.0})
    CHECK(phi(XReal(p), 0.0).is_zero());
  CHECK(phi(inf(), 0.0).is_zero());
}

TEST_CASE("phi rejects out-of-class arguments") {
  CHECK_THROWS_AS(phi(XReal(0.0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(phi(XReal(2.0), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(phi(XReal(2.0), std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi(XReal(2.0), std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
}

TEST_CASE("phi saturates on finite-p overflow") {
  CHECK(phi(XReal(400.0), 100.0).is_inf());
}

TEST_CASE("modular examples") {
  Partition part = unit_cells(2);
  SimpleFunction zero({0.0, 0.0});
  CHECK(modular(zero, exps({2.0, 7.0}), part).is_zero());

  Partition one = unit_cells(1);
  CHECK(modular(SimpleFunction({1.0}), exps({1.0}), one).value() == doctest::Approx(1.0));

  std::vector<XReal> p1inf = {XReal(1.0), inf()};
  CHECK(modular(SimpleFunction({0.3, 2.0}), p1inf, part).is_inf());

  CHECK_THROWS_AS(modular(SimpleFunction({1.0}), exps({1.0}), part), std::invalid_argument);
}

TEST_CASE("luxemburg norm closed-form cases") {
  Partition one = unit_cells(1);
  CHECK(luxemburg_norm(SimpleFunction({1.0}), exps({1.0}), one).value() ==
        doctest::Approx(1.0).epsilon(1e-10));

  // Essential supremum on a p = inf cell.
  std::vector<XReal> pinf = {inf()};
  CHECK(luxemburg_norm(SimpleFunction({2.5}), pinf, one).value() ==
        doctest::Approx(2.5).epsilon(1e-10));

  // Value 3 on one cell of measure 4 with p = 2: modular(f/6) = (3/6)^2 * 4 = 1
  // exactly, so the norm is 6 = 3 * 4^{1/2}.
  Partition m4({4.0});
  SimpleFunction f3({3.0});
  CHECK(modular(f3, exps({2.0}), m4, 6.0).value() == doctest::Approx(1.0));
  CHECK(luxemburg_norm(f3, exps({2.0}), m4).value() == doctest::Approx(6.0).epsilon(1e-10));

  CHECK(luxemburg_norm(SimpleFunction({0.0}), exps({2.0}), one).is_zero());
}

namespace {

struct RandomSingleLevel {
  Partition part;
  std::vector<XReal> p;
  SimpleFunction f;
};

// Small instances with O(1) norms so absolute tolerances stay meaningful.
RandomSingleLevel random_single(SplitMix64& rng, bool p_at_least_one) {
  std::size_t cells = 1 + rng.uniform_int(0, 3);
  std::vector<double> measures, values;
  std::vector<XReal> p;
  for (std::size_t i = 0; i < cells; ++i) {
    measures.push_back(rng.log_uniform(0.5, 2.0));
    values.push_back(rng.unit() < 0.15 ? 0.0 : rng.log_uniform(0.1, 2.0));
    double u = rng.unit();
    if (u < 0.2) {
      p.push_back(XReal::infinity());
    } else if (p_at_least_one) {
      p.push_back(XReal(rng.log_uniform(1.0, 8.0)));
    } else {
      p.push_back(XReal(rng.log_uniform(0.4, 8.0)));
    }
  }
  return RandomSingleLevel{Partition(measures), std::move(p), SimpleFunction(values)};
}

}  // namespace

TEST_CASE("modular is non-increasing in lambda") {
  SplitMix64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    auto inst = random_single(rng, false);
    double l1 = rng.log_uniform(0.05, 5.0);
    double l2 = l1 * rng.log_uniform(1.0, 10.0);
    CHECK(modular(inst.f, inst.p, inst.part, l2) <= modular(inst.f, inst.p, inst.part, l1));
  }
}

TEST_CASE("luxemburg norm homogeneity") {
  SplitMix64 rng(77);
  const double tol = kDefaultTol;
  for (int k = 0; k < 100; ++k) {
    auto inst = random_single(rng, false);
    double n = luxemburg_norm(inst.f, inst.p, inst.part, tol).value();
    for (double c : {0.5, 2.0, 10.0}) {
      double nc = luxemburg_norm(scaled(inst.f, c), inst.p, inst.part, tol).value();
      CHECK(std::abs(nc - c * n) <= 2 * tol * std::max(1.0, c * n));
    }
  }
}

TEST_CASE("luxemburg norm brackets the unit ball") {
  SplitMix64 rng(91);
  const double tol = kDefaultTol;
  for (int k = 0; k < 200; ++k) {
    auto inst = random_single(rng, false);
    double n = luxemburg_norm(inst.f, inst.p, inst.part, tol).value();
    if (n == 0.0) continue;
    CHECK(modular(inst.f, inst.p, inst.part, n * (1 + 10 * tol)) <= XReal(1.0));
    CHECK(modular(inst.f, inst.p, inst.part, n * (1 - 10 * tol)) >= XReal(1.0));
  }
}

TEST_CASE("luxemburg norm matches the constant-exponent closed form") {
  SplitMix64 rng(5150);
  const double tol = kDefaultTol;
  for (int k = 0; k < 200; ++k) {
    auto inst = random_single(rng, false);
    double p = rng.log_uniform(0.3, 8.0);
    std::vector<XReal> pv(inst.part.cell_count(), XReal(p));
    double expected = test::constant_p_norm(inst.f, p, inst.part);
    double got = luxemburg_norm(inst.f, pv, inst.part, tol).value();
    CHECK(std::abs(got - expected) <= tol * std::max(1.0, expected) * 4);
  }
}

TEST_CASE("luxemburg norm satisfies the triangle inequality for p >= 1") {
  SplitMix64 rng(31337);
  const double tol = kDefaultTol;
  for (int k = 0; k < 200; ++k) {
    auto inst = random_single(rng, true);
    auto other = random_single(rng, true);
    if (other.f.cell_count() != inst.f.cell_count()) continue;
    double nf = luxemburg_norm(inst.f, inst.p, inst.part, tol).value();
    double ng = luxemburg_norm(other.f, inst.p, inst.part, tol).value();
    double ns = luxemburg_norm(add(inst.f, other.f), inst.p, inst.part, tol).value();
    CHECK(ns <= nf + ng + 10 * tol * std::max(1.0, nf + ng));
  }
}
