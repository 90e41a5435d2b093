#include "cxc/gauge.hpp"

#include <cmath>
#include <cstdlib>

namespace cxc {

namespace {

constexpr long long kGrid = 1LL << 32;

double family_value(GaugeFamily f, double p, double q, double t) {
  switch (f) {
    case GaugeFamily::power:
      return std::pow(t, p);
    case GaugeFamily::logarithmic:
      return 1.0 + std::log(t);
    case GaugeFamily::log_power:
      return std::pow(t, p) * std::pow(1.0 + std::log(t), q);
    default:
      return 1.0;
  }
}

Fraction parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Fraction(std::stoll(s), 1);
    return Fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InputError("bad rational: " + s);
  }
}

}  // namespace

SublinearGauge SublinearGauge::constant(Fraction c) {
  if (!(Fraction(1, 1) <= c)) throw InputError("constant gauge must be >= 1");
  SublinearGauge g;
  g.family_ = GaugeFamily::constant;
  g.c_ = c;
  return g;
}

SublinearGauge SublinearGauge::power(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("power gauge exponent must lie in (0,1)");
  SublinearGauge g;
  g.family_ = GaugeFamily::power;
  g.p_ = p;
  return g;
}

SublinearGauge SublinearGauge::logarithmic() {
  SublinearGauge g;
  g.family_ = GaugeFamily::logarithmic;
  return g;
}

SublinearGauge SublinearGauge::log_power(double p, double q) {
  if (!(p > 0.0 && p < 1.0) || !(q > 0.0))
    throw InputError("log-power gauge needs p in (0,1) and q > 0");
  SublinearGauge g;
  g.family_ = GaugeFamily::log_power;
  g.p_ = p;
  g.q_ = q;
  return g;
}

SublinearGauge SublinearGauge::parse(const std::string& spec) {
  if (spec == "const") return constant(Fraction(1, 1));
  if (spec.rfind("const:", 0) == 0) return constant(parse_fraction(spec.substr(6)));
  if (spec == "sqrt") return sqrt_gauge();
  if (spec == "log") return logarithmic();
  if (spec.rfind("pow:", 0) == 0) {
    try {
      return power(std::stod(spec.substr(4)));
    } catch (const std::exception&) {
      throw InputError("bad gauge exponent: " + spec);
    }
  }
  if (spec.rfind("logpow:", 0) == 0) {
    auto rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("logpow needs two exponents: " + spec);
    try {
      return log_power(std::stod(rest.substr(0, colon)), std::stod(rest.substr(colon + 1)));
    } catch (const std::exception&) {
      throw InputError("bad gauge exponents: " + spec);
    }
  }
  throw InputError("unknown gauge: " + spec +
                   " (expected const, const:N[/D], sqrt, log, pow:P, logpow:P:Q)");
}

Fraction SublinearGauge::eval(long long t) const {
  if (t < 1) t = 1;
  if (family_ == GaugeFamily::constant) return c_;
  long double v = family_value(family_, p_, q_, static_cast<double>(t));
  long long num = llroundl(v * static_cast<long double>(kGrid));
  if (num < kGrid) num = kGrid;  // keep kappa >= 1 despite rounding
  return Fraction(num, kGrid);
}

Fraction SublinearGauge::envelope(long long t) const {
  if (t < 1) t = 1;
  if (family_ == GaugeFamily::constant) return c_ * Fraction(1, t);
  long double v = family_value(family_, p_, q_, static_cast<double>(t));
  long long num = static_cast<long long>(ceill(v * static_cast<long double>(kGrid)));
  return Fraction(num, kGrid) * Fraction(1, t);
}

std::string SublinearGauge::describe() const {
  switch (family_) {
    case GaugeFamily::constant:
      return "const:" + c_.to_string();
    case GaugeFamily::power:
      return "pow:" + std::to_string(p_);
    case GaugeFamily::logarithmic:
      return "log";
    case GaugeFamily::log_power:
      return "logpow:" + std::to_string(p_) + ":" + std::to_string(q_);
  }
  return "?";
}

GaugeCheckReport check_gauge_invariants(const SublinearGauge& gauge, long long t_max) {
  GaugeCheckReport rep;
  if (t_max < 4) t_max = 4;
  auto fail = [&rep](std::string why) {
    rep.ok = false;
    rep.detail = std::move(why);
    return rep;
  };

  Fraction one(1, 1);
  for (long long t = 1; t <= t_max; ++t) {
    Fraction k = gauge.eval(t);
    if (k < one) return fail("kappa(" + std::to_string(t) + ") < 1");
    if (t >= 2 && k < gauge.eval(t - 1))
      return fail("kappa not monotone at t=" + std::to_string(t));
    if (t >= 2 && t + 1 <= t_max) {
      Fraction second = gauge.eval(t + 1) - k - k + gauge.eval(t - 1);
      if (Fraction(0, 1) < second)
        return fail("positive second difference at t=" + std::to_string(t));
    }
  }
  for (long long a : {2, 3, 5})
    for (long long t = 1; a * t <= t_max; ++t)
      if (!(gauge.eval(a * t) <= Fraction(a, 1) * gauge.eval(t)))
        return fail("kappa(" + std::to_string(a) + "t) > " + std::to_string(a) +
                    " kappa(t) at t=" + std::to_string(t));
  for (long long t = 2; t <= t_max; ++t)
    if (gauge.eval(t - 1) * Fraction(1, t - 1) < gauge.eval(t) * Fraction(1, t))
      return fail("kappa(t)/t increases at t=" + std::to_string(t));
  if (!(gauge.eval(t_max) * Fraction(1, t_max) <= gauge.envelope(t_max)))
    return fail("ratio exceeds declared envelope at t_max");

  rep.detail = "gauge invariants hold on [1," + std::to_string(t_max) + "]";
  return rep;
}

}  // namespace cxc
