#pragma once

#include <span>
#include <vector>

#include "curveres/series.hpp"

namespace curveres {

/// One monomial coeff * t^exp of a polynomial coordinate.
struct Term {
  int exp = 1;
  ExactComplex coeff;
};

/// A parametrized germ t -> (a_1(t), ..., a_n(t)) through the origin.
/// Coordinates are 0-based in code; reports print them 1-based.
class Branch {
 public:
  /// Validates: n >= 2, shared precision, every coordinate vanishes at t = 0,
  /// and at least one coordinate has a known order. Throws
  /// CurveError(InvalidBranch) otherwise.
  explicit Branch(std::vector<Series> coords);

  /// Builds a branch from polynomial coordinates. Exponents must be >= 1,
  /// strictly increasing per coordinate and below `precision`; the gcd of
  /// every exponent carrying a nonzero coefficient must be 1.
  static Branch from_polynomials(int precision, const std::vector<std::vector<Term>>& coords);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  int precision() const noexcept { return coords_.front().precision(); }
  const Series& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
  std::span<const Series> coords() const noexcept { return coords_; }

  Branch truncated(int precision) const;

  friend bool operator==(const Branch&, const Branch&) = default;

 private:
  std::vector<Series> coords_;
};

/// Coordinate-wise agreement on every coefficient both sides know.
bool agree(const Branch& a, const Branch& b);

}  // namespace curveres
