#pragma once

#include <string>

#include "cxc/errors.hpp"
#include "cxc/rational.hpp"

namespace cxc {

enum class GaugeFamily { constant, power, logarithmic, log_power };

/// A sublinear gauge: monotone, concave, >= 1, with kappa(t)/t -> 0.
/// Values are exact rationals; irrational families are snapped to a
/// fixed 2^-32 grid, far below the scale of any grid-level invariant.
/// Arguments below 1 evaluate at 1.
class SublinearGauge {
 public:
  static SublinearGauge constant(Fraction c);
  static SublinearGauge power(double p);  // t^p, p in (0,1)
  static SublinearGauge sqrt_gauge() { return power(0.5); }
  static SublinearGauge logarithmic();                 // 1 + ln t
  static SublinearGauge log_power(double p, double q);  // t^p (1 + ln t)^q

  /// Accepts const, const:N[/D], sqrt, log, pow:P, logpow:P:Q.
  static SublinearGauge parse(const std::string& spec);

  Fraction eval(long long t) const;
  /// Declared upper envelope for kappa(t)/t at t (sublinearity witness).
  Fraction envelope(long long t) const;

  GaugeFamily family() const { return family_; }
  std::string describe() const;

 private:
  SublinearGauge() = default;
  GaugeFamily family_ = GaugeFamily::constant;
  Fraction c_{1, 1};
  double p_ = 0.0;
  double q_ = 0.0;
};

struct GaugeCheckReport {
  bool ok = true;
  std::string detail;
};

/// Grid validation on t in [1, t_max]: kappa >= 1, monotone,
/// non-positive second differences, kappa(a t) <= a kappa(t) for
/// a in {2,3,5}, and the ratio kappa(t)/t non-increasing and below the
/// declared envelope at the top of the grid.
GaugeCheckReport check_gauge_invariants(const SublinearGauge& gauge, long long t_max);

}  // namespace cxc
