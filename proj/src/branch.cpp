#include "curveres/branch.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "curveres/error.hpp"

namespace curveres {

Branch::Branch(std::vector<Series> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw CurveError(ErrorKind::InvalidBranch, "ambient dimension must be >= 2");
  const int p = coords_.front().precision();
  bool any_known = false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Series& a = coords_[i];
    if (a.precision() != p) {
      throw CurveError(ErrorKind::InvalidBranch, "coordinates must share one precision");
    }
    if (!a[0].is_zero()) {
      throw CurveError(ErrorKind::InvalidBranch,
                       "coordinate " + std::to_string(i + 1) + " does not vanish at the origin");
    }
    any_known = any_known || a.order().has_value();
  }
  if (!any_known) {
    throw CurveError(ErrorKind::InvalidBranch, "constant germ: every coordinate vanishes to precision");
  }
}

Branch Branch::from_polynomials(int precision, const std::vector<std::vector<Term>>& coords) {
  if (precision < 2) throw CurveError(ErrorKind::InvalidBranch, "precision must be >= 2");
  int g = 0;
  std::vector<int> lowest(coords.size(), 0);  // 0 while the coordinate is zero
  std::vector<Series> series;
  series.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::vector<ExactComplex> c(static_cast<std::size_t>(precision));
    int last = 0;
    for (const Term& term : coords[i]) {
      const std::string where = "coordinate " + std::to_string(i + 1) + ", exponent " + std::to_string(term.exp);
      if (term.exp < 1) throw CurveError(ErrorKind::InvalidBranch, where + ": exponents must be >= 1");
      if (term.exp <= last) throw CurveError(ErrorKind::InvalidBranch, where + ": exponents must strictly increase");
      if (term.exp >= precision) {
        throw CurveError(ErrorKind::InvalidBranch, where + ": precision must exceed every exponent");
      }
      last = term.exp;
      c[static_cast<std::size_t>(term.exp)] = term.coeff;
      if (!term.coeff.is_zero()) {
        if (lowest[i] == 0) lowest[i] = term.exp;
        g = std::gcd(g, term.exp);
      }
    }
    series.emplace_back(std::move(c));
  }
  if (g > 1) {
    throw CurveError(ErrorKind::InvalidBranch,
                     "parametrization is not primitive: gcd of exponents is " + std::to_string(g));
  }
  // A germ inside a coordinate axis covers the axis m times unless m = 1.
  if (std::ranges::count(lowest, 0) + 1 == static_cast<std::ptrdiff_t>(lowest.size())) {
    const auto axis = std::ranges::find_if(lowest, [](int e) { return e != 0; });
    if (*axis > 1) {
      throw CurveError(ErrorKind::InvalidBranch,
                       "parametrization is not primitive: image lies on coordinate axis " +
                           std::to_string(axis - lowest.begin() + 1) + " with order " + std::to_string(*axis));
    }
  }
  return Branch(std::move(series));
}

Branch Branch::truncated(int precision) const {
  std::vector<Series> c;
  c.reserve(coords_.size());
  for (const auto& a : coords_) c.push_back(a.truncated(precision));
  return Branch(std::move(c));
}

bool agree(const Branch& a, const Branch& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (!agree(a.coord(i), b.coord(i))) return false;
  }
  return true;
}

}  // namespace curveres
