#pragma once

// Two-mode eigenfunction families on the square
//   Phi(x, y) = cos(theta) f_p(x) f_q(y) + sin(theta) f_q(x) f_p(y)
// with the unnormalised branch factors f (same zero set as the normalised
// family), and the nodal-domain census built on them.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "robinsq/robin1d.hpp"

namespace robinsq {

class ThetaFamily {
 public:
  /// theta is reduced into [0, pi); a shift by pi flips the sign of Phi.
  ThetaFamily(RobinParam h, double theta, int p, int q);

  RobinParam h() const { return h_; }
  double theta() const { return theta_; }  // reduced
  int p() const { return fp_.p; }
  int q() const { return fq_.p; }
  /// (p + q) mod 2; 1 means Phi(-x,-y) = -Phi(x,y).
  int symmetric_factor() const { return (fp_.p + fq_.p) % 2; }
  const AlphaSolution& branch_p() const { return fp_; }
  const AlphaSolution& branch_q() const { return fq_; }
  double cos_theta() const { return c_; }
  double sin_theta() const { return s_; }
  /// Upper bound of |Phi| on the square.
  double scale() const { return std::abs(c_) + std::abs(s_); }

  /// Phi for the original (unreduced) theta; throws outside the closed square.
  double operator()(double x, double y) const;
  /// Same, without the range check (callers stay inside the square).
  double value(double x, double y) const;
  std::array<double, 2> gradient(double x, double y) const;
  /// (xx, xy, yy)
  std::array<double, 3> hessian(double x, double y) const;

  /// 2D eigenvalue shared by the two modes.
  double lambda() const;

 private:
  RobinParam h_;
  double theta_ = 0.0;
  double sign_ = 1.0;
  double c_ = 1.0;
  double s_ = 0.0;
  AlphaSolution fp_;
  AlphaSolution fq_;
};

double eval_phi(const ThetaFamily& family, double x, double y);

class UnstableCount : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DomainInfo {
  int sign = 0;         // +1 or -1
  double area = 0.0;    // pixel-area estimate
  bool outer = false;   // touches the boundary of the square
};

struct GridCount {
  int resolution = 0;
  int domains = 0;
  bool refined = false;          // some coarse cells needed subdivision
  std::vector<DomainInfo> info;  // one per counted domain
  int nodal_components = 0;      // 8-connected components of nodal cells
  int nodal_closed = 0;          // those not reaching the boundary ring
};

/// Single-resolution count: R x R cells, mixed cells split 4 x 4.
GridCount count_at_resolution(const ThetaFamily& family, int resolution);

struct NodalCensus {
  int domains = 0;
  int boundary_zeros = 0;
  int interior_critical = 0;
  int resolution = 0;
  bool refined = false;
  int inner_domains = 0;
  int outer_domains = 0;
  std::vector<DomainInfo> info;
  int nodal_closed = 0;
};

inline constexpr int kDefaultResolution = 1024;
inline constexpr int kMaxResolution = 8192;

/// Stabilised census: counts at R and 2R must agree (then 2R and 4R, up to
/// kMaxResolution); throws UnstableCount otherwise. resolution >= 64.
NodalCensus count_nodal_domains(const ThetaFamily& family, int resolution = kDefaultResolution);

enum class Side { left, right, bottom, top };  // x = -pi/2, x = pi/2, y = -pi/2, y = pi/2

const char* side_name(Side side);

struct BoundaryPoint {
  double x = 0.0;
  double y = 0.0;
  bool corner = false;
  bool tangential = false;  // zero without sign change along the side
};

struct SideZeros {
  Side side = Side::left;
  std::vector<BoundaryPoint> zeros;  // corners excluded
  int count() const { return static_cast<int>(zeros.size()); }
};

/// Zeros of Phi on one open side. Throws UnsupportedCase for h = inf.
SideZeros boundary_zero_count(const ThetaFamily& family, Side side);

/// Points where the nodal set meets the boundary: side zeros plus corners.
/// For h = inf the sides are nodal, and the points are sign changes of the
/// normal derivative plus corners entered by a nodal arc.
std::vector<BoundaryPoint> boundary_points(const ThetaFamily& family);

/// Sign changes of Phi on the part inside the square of a circle of the
/// given radius about a boundary point (rho in the Euler formula).
int boundary_valence(const ThetaFamily& family, const BoundaryPoint& point, double radius);
/// Sign changes of Phi on a full circle about an interior point (nu).
int interior_valence(const ThetaFamily& family, double x, double y, double radius);

struct CriticalPoint {
  double x = 0.0;
  double y = 0.0;
  int valence = 0;  // nodal arcs meeting at the point
};

/// Interior zeros of Phi with vanishing gradient.
std::vector<CriticalPoint> interior_critical_points(const ThetaFamily& family);

struct EulerReport {
  int b0 = 1;
  int b1 = 0;
  double critical_term = 0.0;  // sum(nu/2 - 1)
  double boundary_term = 0.0;  // sum(rho) / 2
  int predicted = 0;
  int census_domains = 0;
  bool match = false;
  std::vector<CriticalPoint> interior;
  std::vector<BoundaryPoint> boundary;
  std::vector<int> rho;
};

EulerReport euler_count_check(const ThetaFamily& family, const NodalCensus& census);

}  // namespace robinsq
