#include <doctest.h>

#include <limits>

#include "vexl/xreal.hpp"

using vexl::XReal;

TEST_CASE("xreal arithmetic conventions") {
  XReal zero(0.0);
  XReal two(2.0);
  XReal inf = XReal::infinity();

  CHECK((zero * inf).is_zero());
  CHECK((inf * zero).is_zero());
  CHECK((two * inf).is_inf());
  CHECK((two + inf).is_inf());
  CHECK((inf + inf).is_inf());
  CHECK((two * two).value() == 4.0);
  CHECK((two + two).value() == 4.0);
}

TEST_CASE("xreal saturates instead of overflowing") {
  XReal big(1e308);
  CHECK((big + big).is_inf());
  CHECK((big * big).is_inf());
}

TEST_CASE("xreal rejects NaN and negatives") {
  CHECK_THROWS_AS(XReal(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(XReal(-1.0), std::invalid_argument);
  CHECK_NOTHROW(XReal(std::numeric_limits<double>::infinity()));
}

TEST_CASE("xreal ordering") {
  CHECK(XReal(1.0) < XReal::infinity());
  CHECK(XReal::infinity() <= XReal::infinity());
  CHECK(XReal::infinity() == XReal::infinity());
  CHECK(XReal(0.0) <= XReal(0.0));
  CHECK(XReal(3.0) > XReal(2.0));
}
