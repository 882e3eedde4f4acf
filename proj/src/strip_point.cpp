#include "zetalab/strip_point.hpp"

#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

std::string_view to_string(StripRegion region) noexcept {
  switch (region) {
    case StripRegion::OpenStrip:
      return "open-strip";
    case StripRegion::Boundary:
      return "boundary";
    case StripRegion::Exterior:
      return "exterior";
  }
  return "exterior";
}

void require_open_strip(const StripPoint& s, std::string_view what) {
  if (!s.in_open_strip()) {
    throw InvalidArgument(std::string(what) +
                          ": point must lie in the open strip 0 < sigma < 1");
  }
}

}  // namespace zetalab
