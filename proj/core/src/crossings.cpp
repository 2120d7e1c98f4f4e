#include "robinsq/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robinsq/robin1d.hpp"
#include "robinsq/roots.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;

void require_interior(double h, const char* what) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::domain_error(std::string(what) + ": requires 0 < h < inf");
  }
}

double lambda_at(ModeLabel l, double h) {
  return eigenvalue(l, RobinParam::finite(h)).value;
}

double slope_term(int p, double h) {
  const double a = solve_alpha(p, RobinParam::finite(h)).alpha;
  return a * a / derivative_weight(a, h);
}

double lambda_slope(ModeLabel l, double h) {
  return (2.0 / kPi) * (slope_term(l.p, h) + slope_term(l.q, h));
}

int spread(ModeLabel l) { return std::abs(l.q - l.p); }

}  // namespace

CurvePair CurvePair::make(ModeLabel a, ModeLabel b) {
  if (a.p < 0 || a.q < 0 || b.p < 0 || b.q < 0) {
    throw std::invalid_argument("CurvePair: negative mode index");
  }
  const CurvePair pair{a.canonical(), b.canonical()};
  if (pair.a == pair.b) throw std::invalid_argument("CurvePair: labels coincide");
  return pair;
}

double sigma(ModeLabel a, ModeLabel b, double h) {
  require_interior(h, "sigma");
  return lambda_at(a, h) - lambda_at(b, h);
}

double sigma(const CurvePair& pair, double h) { return sigma(pair.a, pair.b, h); }

double sigma_prime(ModeLabel a, ModeLabel b, double h) {
  require_interior(h, "sigma_prime");
  return lambda_slope(a, h) - lambda_slope(b, h);
}

double sigma_prime(const CurvePair& pair, double h) { return sigma_prime(pair.a, pair.b, h); }

std::optional<CrossingEvent> find_crossing(const CurvePair& pair, double h_lo, double h_hi) {
  if (!(h_lo > 0.0 && h_lo < h_hi && std::isfinite(h_hi))) {
    throw std::invalid_argument("find_crossing: need 0 < h_lo < h_hi < inf");
  }
  const auto f = [&pair](double h) { return sigma(pair, h); };
  const double flo = f(h_lo);
  const double fhi = f(h_hi);
  if ((flo > 0.0 && fhi > 0.0) || (flo < 0.0 && fhi < 0.0)) return std::nullopt;

  double h = bisect(f, h_lo, h_hi, {.x_tolerance = 1e-10});
  const double d = sigma_prime(pair, h);
  if (d != 0.0) {
    const double step = h - f(h) / d;
    if (step > h_lo && step < h_hi) h = step;
  }

  CrossingEvent ev;
  ev.pair = pair;
  ev.h_star = h;
  ev.lambda_star = lambda_at(pair.a, h);
  ev.sigma_prime_at = sigma_prime(pair, h);
  int sign = ev.sigma_prime_at > 0.0 ? 1 : (ev.sigma_prime_at < 0.0 ? -1 : 0);
  for (const double factor : {0.9, 0.95, 0.99, 1.01, 1.05, 1.1}) {
    const double s = sigma_prime(pair, h * factor);
    const int si = s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
    if (si != sign) sign = 0;
  }
  ev.certificate_sign = sign;
  return ev;
}

int sigma_sign_changes(const CurvePair& pair, double h_lo, double h_hi, int points) {
  if (points < 2) throw std::invalid_argument("sigma_sign_changes: need >= 2 points");
  const double llo = std::log(h_lo);
  const double lhi = std::log(h_hi);
  int changes = 0;
  int last = 0;
  for (int i = 0; i < points; ++i) {
    const double h = std::exp(llo + (lhi - llo) * i / (points - 1));
    const double s = sigma(pair, h);
    const int si = s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
    if (si == 0) continue;
    if (last != 0 && si != last) ++changes;
    last = si;
  }
  return changes;
}

double threshold_h(ModeLabel label, double level) {
  if (label.p < 0 || label.q < 0) throw std::invalid_argument("threshold_h: negative index");
  const double lo_val = eigenvalue(label, RobinParam::neumann()).value;
  const double hi_val = eigenvalue(label, RobinParam::infinity()).value;
  if (!(level > lo_val && level < hi_val)) {
    throw std::out_of_range("threshold_h: level outside (Neumann, Dirichlet) range of label");
  }
  const auto f = [label, level](double h) {
    return (h == 0.0 ? eigenvalue(label, RobinParam::neumann()).value : lambda_at(label, h)) -
           level;
  };
  double hi = 1.0;
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e15) throw std::out_of_range("threshold_h: level too close to Dirichlet value");
  }
  const double lo = hi > 1.0 ? 0.5 * hi : 0.0;
  double h = bisect(f, lo, hi, {.x_tolerance = 1e-13 * std::max(1.0, hi)});
  if (h > 0.0) {
    const double d = lambda_slope(label, h);
    const double step = h - f(h) / d;
    if (d > 0.0 && step > lo && step < hi) h = step;
  }
  return h;
}

std::vector<CrossingEvent> multi_crossing_scan(const std::vector<ModeLabel>& labels,
                                               double h_lo, double h_hi) {
  constexpr int kPoints = 512;
  std::vector<CrossingEvent> events;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const CurvePair pair = CurvePair::make(labels[i], labels[j]);
      const double llo = std::log(h_lo);
      const double lhi = std::log(h_hi);
      double prev_h = h_lo;
      double prev_s = sigma(pair, prev_h);
      for (int k = 1; k < kPoints; ++k) {
        const double h = std::exp(llo + (lhi - llo) * k / (kPoints - 1));
        const double s = sigma(pair, h);
        if ((prev_s < 0.0 && s >= 0.0) || (prev_s > 0.0 && s <= 0.0)) {
          if (auto ev = find_crossing(pair, prev_h, h)) events.push_back(*ev);
        }
        prev_h = h;
        prev_s = s;
      }
    }
  }
  std::sort(events.begin(), events.end(),
            [](const CrossingEvent& x, const CrossingEvent& y) { return x.h_star < y.h_star; });
  return events;
}

OrderingReport ordering_after_crossing(const CrossingEvent& event,
                                       const std::vector<double>& h_above,
                                       const std::vector<double>& h_below) {
  OrderingReport r;
  const ModeLabel a = event.pair.a.canonical();
  const ModeLabel b = event.pair.b.canonical();
  const bool a_wide = spread(a) > spread(b) || (spread(a) == spread(b) && a.p < b.p);
  r.wide = a_wide ? a : b;
  r.narrow = a_wide ? b : a;
  r.nested = r.wide.p < r.narrow.p && r.narrow.p <= r.narrow.q && r.narrow.q < r.wide.q;

  const double hs = event.h_star;
  r.gap_at_star = std::abs(lambda_at(r.wide, hs) - lambda_at(r.narrow, hs));
  std::vector<double> above = h_above;
  std::vector<double> below = h_below;
  if (above.empty()) above = {1.2 * hs, 3.0 * hs, 30.0 * hs};
  if (below.empty()) below = {0.8 * hs, 0.5 * hs, 0.1 * hs};

  bool ok = r.nested && r.gap_at_star <= 1e-9 * std::max(1.0, event.lambda_star);
  for (const double h : above) {
    if (!(h > hs)) throw std::invalid_argument("ordering_after_crossing: sample not above h*");
    const OrderingSample s{h, lambda_at(r.wide, h), lambda_at(r.narrow, h)};
    ok = ok && s.wide < s.narrow;
    r.above.push_back(s);
  }
  for (const double h : below) {
    if (!(h < hs && h > 0.0)) {
      throw std::invalid_argument("ordering_after_crossing: sample not in (0, h*)");
    }
    const OrderingSample s{h, lambda_at(r.wide, h), lambda_at(r.narrow, h)};
    ok = ok && s.wide > s.narrow;
    r.below.push_back(s);
  }
  r.ok = ok;
  return r;
}

}  // namespace robinsq
