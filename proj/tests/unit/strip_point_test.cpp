#include <doctest.h>

#include "zetalab/errors.hpp"
#include "zetalab/strip_point.hpp"

TEST_CASE("strip regions") {
  using zetalab::StripPoint;
  using zetalab::StripRegion;
  CHECK(StripPoint{0.5, 14.0}.region() == StripRegion::OpenStrip);
  CHECK(StripPoint{0.0, 3.0}.region() == StripRegion::Boundary);
  CHECK(StripPoint{1.0, 3.0}.region() == StripRegion::Boundary);
  CHECK(StripPoint{1.5, 0.0}.region() == StripRegion::Exterior);
  CHECK(StripPoint{-0.1, 0.0}.region() == StripRegion::Exterior);
  CHECK(to_string(StripRegion::OpenStrip) == "open-strip");
  CHECK(StripPoint{0.3, 2.0}.conj() == StripPoint{0.3, -2.0});
  CHECK(StripPoint(zetalab::Complex(0.25, -4.0)).value() == zetalab::Complex(0.25, -4.0));
  CHECK_THROWS_AS(zetalab::require_open_strip({1.0, 0.0}, "test"), zetalab::InvalidArgument);
  CHECK_NOTHROW(zetalab::require_open_strip({0.999, 0.0}, "test"));
}
