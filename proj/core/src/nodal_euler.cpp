#include <algorithm>
#include <cmath>

#include "robinsq/nodal.hpp"

namespace robinsq {

EulerReport euler_count_check(const ThetaFamily& family, const NodalCensus& census) {
  EulerReport r;
  r.b0 = 1;
  r.b1 = 1 + census.nodal_closed;
  r.interior = interior_critical_points(family);
  r.boundary = boundary_points(family);
  for (const auto& c : r.interior) r.critical_term += 0.5 * c.valence - 1.0;
  for (const auto& b : r.boundary) {
    double radius = 1e-2;
    for (const auto& o : r.boundary) {
      const double d = std::hypot(o.x - b.x, o.y - b.y);
      if (d > 0.0) radius = std::min(radius, 0.25 * d);
    }
    for (const auto& c : r.interior) radius = std::min(radius, 0.25 * std::hypot(c.x - b.x, c.y - b.y));
    const int rho = boundary_valence(family, b, radius);
    r.rho.push_back(rho);
    r.boundary_term += 0.5 * rho;
  }
  r.predicted = static_cast<int>(std::lround(1.0 + r.b1 - r.b0 + r.critical_term + r.boundary_term));
  r.census_domains = census.domains;
  r.match = r.predicted == census.domains;
  return r;
}

}  // namespace robinsq
