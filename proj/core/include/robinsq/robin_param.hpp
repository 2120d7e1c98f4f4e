#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace robinsq {

/// Robin parameter h in [0, +inf]. The infinite value is an explicit state
/// (the Dirichlet limit), never a large float.
class RobinParam {
 public:
  constexpr RobinParam() = default;

  static RobinParam finite(double h) {
    if (!(h >= 0.0) || h == std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("Robin parameter must be finite and >= 0");
    }
    return RobinParam(h, false);
  }
  static constexpr RobinParam infinity() { return RobinParam(0.0, true); }
  static constexpr RobinParam neumann() { return RobinParam(0.0, false); }

  /// Accepts a nonnegative number or one of "inf", "infinity", "dirichlet".
  static RobinParam parse(std::string_view text);

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0.0; }
  constexpr bool is_interior() const { return !infinite_ && value_ > 0.0; }

  /// Finite value; throws for the infinite state.
  double value() const {
    if (infinite_) throw std::logic_error("RobinParam::value() on h = inf");
    return value_;
  }
  /// +inf as an IEEE double, for display and plotting only.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  std::string to_string() const;

  friend constexpr bool operator==(RobinParam a, RobinParam b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  constexpr RobinParam(double v, bool inf) : value_(v), infinite_(inf) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace robinsq
