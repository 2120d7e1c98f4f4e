#pragma once

// Crossings of the eigenvalue curves h -> lambda_{p,q,h} of the square.

#include <optional>
#include <vector>

#include "robinsq/spectrum2d.hpp"

namespace robinsq {

/// Two distinct curves. Each label is canonicalised to p <= q; the (a, b)
/// order is kept, so sigma = lambda_a - lambda_b.
struct CurvePair {
  ModeLabel a;
  ModeLabel b;

  /// Throws std::invalid_argument when a and b coincide after canonicalisation.
  static CurvePair make(ModeLabel a, ModeLabel b);
};

/// lambda_a(h) - lambda_b(h) for raw labels (no canonicalisation). 0 < h < inf.
double sigma(ModeLabel a, ModeLabel b, double h);
double sigma(const CurvePair& pair, double h);

/// d sigma / dh = (2/pi) sum(+-alpha_k^2 / a_k), a_k = h pi + alpha_k^2/2 + h^2 pi^2/2.
double sigma_prime(ModeLabel a, ModeLabel b, double h);
double sigma_prime(const CurvePair& pair, double h);

struct CrossingEvent {
  CurvePair pair;
  double h_star = 0.0;
  double lambda_star = 0.0;
  double sigma_prime_at = 0.0;
  int certificate_sign = 0;  // common sign of sigma' at sampled h near h_star, 0 if mixed
};

/// Root of sigma on [h_lo, h_hi] if sigma changes sign there.
std::optional<CrossingEvent> find_crossing(const CurvePair& pair, double h_lo, double h_hi);

/// Sign changes of sigma on `points` log-spaced samples of [h_lo, h_hi].
int sigma_sign_changes(const CurvePair& pair, double h_lo = 1e-3, double h_hi = 1e3,
                       int points = 512);

/// The h with lambda_{label,h} = level. The level must lie strictly between
/// the Neumann and Dirichlet values of the label (std::out_of_range otherwise).
double threshold_h(ModeLabel label, double level);

/// Every crossing among pairs of `labels` in [h_lo, h_hi], sorted by h.
std::vector<CrossingEvent> multi_crossing_scan(const std::vector<ModeLabel>& labels,
                                               double h_lo, double h_hi);

struct OrderingSample {
  double h = 0.0;
  double wide = 0.0;    // lambda of the label with the wider index spread
  double narrow = 0.0;  // lambda of the nested label
};

struct OrderingReport {
  ModeLabel wide;
  ModeLabel narrow;
  bool nested = false;      // p < p' <= q' < q holds for (wide, narrow)
  double gap_at_star = 0.0;  // |lambda_wide - lambda_narrow| at h_star
  std::vector<OrderingSample> above;  // expected wide < narrow
  std::vector<OrderingSample> below;  // expected wide > narrow
  bool ok = false;
};

/// Checks that past h_star the wider-spread curve lies below the nested one,
/// and the reverse before h_star.
OrderingReport ordering_after_crossing(const CrossingEvent& event,
                                       const std::vector<double>& h_above = {},
                                       const std::vector<double>& h_below = {});

}  // namespace robinsq
