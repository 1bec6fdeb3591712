#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "curveres/exact.hpp"

namespace curveres {

/// Truncated power series c_0 + c_1 t + ... + c_{p-1} t^{p-1} + O(t^p) over
/// Gaussian rationals. The precision p is the number of known coefficients.
///
/// A series whose known coefficients are all zero is a legal value: its
/// order is only known to be >= p, so order() returns nullopt and every
/// operation that needs the order throws instead of treating it as zero.
class Series {
 public:
  /// Throws std::invalid_argument when `coeffs` is empty.
  explicit Series(std::vector<ExactComplex> coeffs);

  static Series zero(int precision);
  static Series constant(const ExactComplex& c, int precision);
  static Series monomial(const ExactComplex& c, int exponent, int precision);
  /// The parameter itself, t + O(t^precision).
  static Series identity(int precision) { return monomial(1, 1, precision); }

  int precision() const noexcept { return static_cast<int>(coeffs_.size()); }
  const ExactComplex& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const ExactComplex> coeffs() const noexcept { return coeffs_; }

  std::optional<int> order() const;
  /// Throws CurveError(OrderUnknown) if every known coefficient is zero.
  int known_order() const;
  bool vanishes() const { return !order().has_value(); }

  Series truncated(int precision) const;
  /// Drops the first `k` coefficients: the series divided by t^k, assuming
  /// those coefficients are zero. Precision shrinks by k.
  Series shifted_down(int k) const;

  friend bool operator==(const Series&, const Series&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Series& s);

 private:
  std::vector<ExactComplex> coeffs_;
};

Series operator+(const Series& s, const Series& t);
Series operator-(const Series& s, const Series& t);
Series operator-(const Series& s);
Series operator*(const Series& s, const Series& t);
Series operator*(const ExactComplex& c, const Series& s);

/// Cauchy product keeping every coefficient the factors determine:
/// precision min(prec s + ord t, prec t + ord s), where a series vanishing to
/// its precision counts as having order equal to that precision.
Series mul_full(const Series& s, const Series& t);

inline Series add(const Series& s, const Series& t) { return s + t; }
inline Series mul(const Series& s, const Series& t) { return s * t; }

/// Multiplicative inverse of a unit. Throws NotAUnit if s(0) == 0.
Series unit_invert(const Series& s);

/// q with s = q * t. Precision of q is min(prec s, prec t) - order(t).
Series divide(const Series& s, const Series& t);

/// Compositional inverse r of an order-1 series: s(r(x)) = x.
Series reversion(const Series& s);

/// s(g(x)) for g of known order >= 1, at precision min(prec s, prec g).
Series compose(const Series& s, const Series& g);

std::complex<double> evaluate_numeric(const Series& s, std::complex<double> x);

/// True when the two series agree on every coefficient both of them know.
bool agree(const Series& s, const Series& t);

}  // namespace curveres
