#include "selfenergy/geometry.hpp"
#include "selfenergy/error.hpp"

#include <cmath>

namespace selfenergy {

Geometry::Geometry(double d) : m_d(d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw Error(ErrorKind::InvalidArgument, "distance d must be positive");
}

} // namespace selfenergy
