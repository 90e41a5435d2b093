#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace cxc {

/// Exact rational with 64-bit numerator/denominator. Comparisons and
/// products go through 128-bit intermediates, so gauge values and
/// excursion constants never see floating-point rounding.
struct Fraction {
  long long num = 0;
  long long den = 1;  // > 0

  Fraction() = default;
  Fraction(long long n) : num(n), den(1) {}
  Fraction(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    assert(den != 0);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    // Cross-reduce first so desk-scale products stay inside 64 bits.
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    Fraction r;
    r.num = (a.num / g1) * (b.num / g2);
    r.den = (a.den / g2) * (b.den / g1);
    r.normalize();
    return r;
  }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    Fraction r;
    r.num = a.num * b.den + b.num * a.den;
    r.den = a.den * b.den;
    r.normalize();
    return r;
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    Fraction r;
    r.num = a.num * b.den - b.num * a.den;
    r.den = a.den * b.den;
    r.normalize();
    return r;
  }
};

/// v <= c * kappa without materializing the product.
inline bool le_scaled(long long v, const Fraction& c, const Fraction& kappa) {
  __int128 lhs = static_cast<__int128>(v) * c.den * kappa.den;
  __int128 rhs = static_cast<__int128>(c.num) * kappa.num;
  return lhs <= rhs;
}

/// v / kappa as an exact fraction.
inline Fraction ratio_over(long long v, const Fraction& kappa) {
  assert(kappa.num > 0);
  return Fraction(v, 1) * Fraction(kappa.den, kappa.num);
}

}  // namespace cxc
