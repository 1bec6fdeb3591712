#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace curveres {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Gaussian rational re + im*i. Both parts are kept in lowest terms, so
/// equality is exact structural equality.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re, Rational im = 0);

  static ExactComplex from_strings(std::string_view re, std::string_view im);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  /// Throws std::domain_error for zero.
  ExactComplex inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace curveres
