#include "curveres/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "curveres/error.hpp"

namespace curveres {

Series::Series(std::vector<ExactComplex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series precision must be >= 1");
}

Series Series::zero(int precision) {
  if (precision < 1) throw std::invalid_argument("series precision must be >= 1");
  return Series(std::vector<ExactComplex>(static_cast<std::size_t>(precision)));
}

Series Series::constant(const ExactComplex& c, int precision) { return monomial(c, 0, precision); }

Series Series::monomial(const ExactComplex& c, int exponent, int precision) {
  Series s = zero(precision);
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent < precision) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

std::optional<int> Series::order() const {
  for (int k = 0; k < precision(); ++k) {
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return std::nullopt;
}

int Series::known_order() const {
  if (auto k = order()) return *k;
  throw CurveError(ErrorKind::OrderUnknown,
                   "series vanishes to its precision " + std::to_string(precision()));
}

Series Series::truncated(int precision) const {
  if (precision < 1) throw CurveError(ErrorKind::PrecisionExhausted, "truncation to precision < 1");
  std::vector<ExactComplex> c(coeffs_.begin(), coeffs_.begin() + std::min(precision, this->precision()));
  return Series(std::move(c));
}

Series Series::shifted_down(int k) const {
  if (precision() - k < 1) {
    throw CurveError(ErrorKind::PrecisionExhausted, "shift by " + std::to_string(k) + " leaves no known coefficient");
  }
  return Series(std::vector<ExactComplex>(coeffs_.begin() + k, coeffs_.end()));
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  bool first = true;
  for (int k = 0; k < s.precision(); ++k) {
    if (s[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << s[k] << ")";
    if (k > 0) os << "*t^" << k;
    first = false;
  }
  if (first) os << "0";
  return os << " + O(t^" << s.precision() << ")";
}

Series operator+(const Series& s, const Series& t) {
  const int p = std::min(s.precision(), t.precision());
  std::vector<ExactComplex> c(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) c[k] = s[k] + t[k];
  return Series(std::move(c));
}

Series operator-(const Series& s) {
  std::vector<ExactComplex> c;
  c.reserve(s.coeffs().size());
  for (const auto& a : s.coeffs()) c.push_back(-a);
  return Series(std::move(c));
}

Series operator-(const Series& s, const Series& t) { return s + (-t); }

Series operator*(const Series& s, const Series& t) {
  const int p = std::min(s.precision(), t.precision());
  std::vector<ExactComplex> c(static_cast<std::size_t>(p));
  const int os = s.order().value_or(p);
  const int ot = t.order().value_or(p);
  for (int i = os; i < p; ++i) {
    if (s[i].is_zero()) continue;
    for (int j = ot; i + j < p; ++j) {
      if (t[j].is_zero()) continue;
      c[i + j] += s[i] * t[j];
    }
  }
  return Series(std::move(c));
}

Series mul_full(const Series& s, const Series& t) {
  const int os = s.order().value_or(s.precision());
  const int ot = t.order().value_or(t.precision());
  const int p = std::min(s.precision() + ot, t.precision() + os);
  std::vector<ExactComplex> c(static_cast<std::size_t>(p));
  for (int i = os; i < s.precision(); ++i) {
    if (s[i].is_zero()) continue;
    for (int j = ot; j < t.precision() && i + j < p; ++j) {
      if (!t[j].is_zero()) c[i + j] += s[i] * t[j];
    }
  }
  return Series(std::move(c));
}

Series operator*(const ExactComplex& a, const Series& s) {
  std::vector<ExactComplex> c;
  c.reserve(s.coeffs().size());
  for (const auto& x : s.coeffs()) c.push_back(a * x);
  return Series(std::move(c));
}

Series unit_invert(const Series& s) {
  if (s[0].is_zero()) {
    throw CurveError(ErrorKind::NotAUnit, "series has zero constant term");
  }
  const int p = s.precision();
  const ExactComplex inv0 = s[0].inverse();
  std::vector<ExactComplex> r(static_cast<std::size_t>(p));
  r[0] = inv0;
  for (int k = 1; k < p; ++k) {
    ExactComplex acc;
    for (int j = 1; j <= k; ++j) {
      if (!s[j].is_zero()) acc += s[j] * r[k - j];
    }
    r[k] = -(acc * inv0);
  }
  return Series(std::move(r));
}

Series divide(const Series& s, const Series& t) {
  const auto m = t.order();
  if (!m) throw CurveError(ErrorKind::OrderUnknown, "divisor vanishes to its precision");
  const int p = std::min(s.precision(), t.precision()) - *m;
  if (p < 1) {
    throw CurveError(ErrorKind::PrecisionExhausted,
                     "quotient precision " + std::to_string(p) + " < 1");
  }
  if (const auto os = s.order(); os && *os < *m) {
    throw CurveError(ErrorKind::NotDivisible, "dividend order " + std::to_string(*os) +
                                                  " below divisor order " + std::to_string(*m));
  }
  // Both sides are divisible by t^m; what remains of the divisor is a unit.
  const Series num = s.truncated(p + *m).shifted_down(*m);
  const Series den = t.truncated(p + *m).shifted_down(*m);
  return num * unit_invert(den);
}

Series reversion(const Series& s) {
  if (s.order() != 1) {
    throw CurveError(ErrorKind::OrderNotOne, "reversion needs a series of order exactly 1");
  }
  const int p = s.precision();
  // Lagrange inversion: r_k = (1/k) [x^{k-1}] (x / s(x))^k.
  const Series h = unit_invert(s.shifted_down(1));
  std::vector<ExactComplex> r(static_cast<std::size_t>(p));
  Series power = h;
  for (int k = 1; k < p; ++k) {
    r[k] = power[k - 1] / ExactComplex(k);
    if (k + 1 < p) power = power * h;
  }
  return Series(std::move(r));
}

Series compose(const Series& s, const Series& g) {
  const auto og = g.order();
  if (!og) throw CurveError(ErrorKind::OrderUnknown, "inner series vanishes to its precision");
  if (*og < 1) throw std::invalid_argument("compose: inner series must have order >= 1");
  const int p = std::min(s.precision(), g.precision());
  const Series inner = g.truncated(p);
  // Terms s_j g^j with j*order(g) >= p cannot contribute.
  const int top = std::min(p - 1, (p - 1) / *og);
  Series acc = Series::constant(s[top], p);
  for (int j = top - 1; j >= 0; --j) acc = acc * inner + Series::constant(s[j], p);
  return acc;
}

std::complex<double> evaluate_numeric(const Series& s, std::complex<double> x) {
  std::complex<double> acc{0.0, 0.0};
  for (int k = s.precision() - 1; k >= 0; --k) acc = acc * x + s[k].to_complex();
  return acc;
}

bool agree(const Series& s, const Series& t) {
  const int p = std::min(s.precision(), t.precision());
  for (int k = 0; k < p; ++k) {
    if (s[k] != t[k]) return false;
  }
  return true;
}

}  // namespace curveres
