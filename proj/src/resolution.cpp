#include "curveres/resolution.hpp"

#include <stdexcept>

#include "curveres/compare.hpp"
#include "curveres/error.hpp"

namespace curveres {

std::string_view to_string(Contact c) noexcept {
  return c == Contact::Transverse ? "transverse" : "tangent";
}

std::string_view to_string(ResolutionStatus s) noexcept {
  switch (s) {
    case ResolutionStatus::Resolved: return "resolved";
    case ResolutionStatus::PrecisionExhausted: return "precision-exhausted";
    case ResolutionStatus::StepLimit: return "step-limit";
  }
  return "unknown";
}

int multiplicity(const Branch& b) {
  int m = -1;
  for (const auto& a : b.coords()) {
    if (auto k = a.order(); k && (m < 0 || *k < m)) m = *k;
  }
  if (m < 0) throw CurveError(ErrorKind::OrderUnknown, "no coordinate has a known order");
  return m;
}

std::vector<ExactComplex> tangent_direction(const Branch& b) {
  const int m = multiplicity(b);
  std::vector<ExactComplex> d;
  d.reserve(static_cast<std::size_t>(b.dim()));
  for (const auto& a : b.coords()) d.push_back(a[m]);
  return d;
}

int default_pivot(const Branch& b) {
  const int m = multiplicity(b);
  for (int i = 0; i < b.dim(); ++i) {
    if (b.coord(i).order() == m) return i;
  }
  throw std::logic_error("multiplicity not attained");
}

ResolutionState blowup_in_chart(const ResolutionState& s, int pivot) {
  const Branch& curve = s.curve;
  const int n = curve.dim();
  const int m = multiplicity(curve);
  if (pivot < 0 || pivot >= n || curve.coord(pivot).order() != m) {
    throw std::invalid_argument("pivot " + std::to_string(pivot + 1) + " does not attain the multiplicity");
  }
  const Series& divisor = curve.coord(pivot);
  const int p = curve.precision() - m;
  if (p < 1) {
    throw CurveError(ErrorKind::PrecisionExhausted,
                     "blow-up " + std::to_string(s.step + 1) + " leaves precision " + std::to_string(p));
  }

  std::vector<Series> coords;
  std::vector<ExactComplex> translation(static_cast<std::size_t>(n));
  coords.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == pivot) {
      coords.push_back(divisor.truncated(p));
      continue;
    }
    Series q = divide(curve.coord(j), divisor);
    translation[j] = q[0];
    coords.push_back(q - Series::constant(q[0], p));
  }
  bool any_known = false;
  for (const auto& a : coords) any_known = any_known || a.order().has_value();
  if (!any_known) {
    throw CurveError(ErrorKind::DegenerateCurve,
                     "every coordinate vanishes to precision after blow-up " + std::to_string(s.step + 1));
  }

  ResolutionState next(Branch(std::move(coords)));
  next.step = s.step + 1;
  const int id = next.step;
  next.edges = s.edges;
  for (const auto& [coord, old_id] : s.registry) {
    next.edges.emplace(old_id, id);
    if (coord != pivot && translation[coord].is_zero()) next.registry.emplace(coord, old_id);
  }
  if (n == 2) {
    // Two exceptional curves on a surface met only at the blown-up point.
    for (auto a = s.registry.begin(); a != s.registry.end(); ++a) {
      for (auto b = std::next(a); b != s.registry.end(); ++b) {
        next.edges.erase({std::min(a->second, b->second), std::max(a->second, b->second)});
      }
    }
  }
  next.registry[pivot] = id;
  next.charts = s.charts;
  next.charts.push_back({pivot, std::move(translation)});
  next.multiplicities = s.multiplicities;
  next.multiplicities.push_back(m);
  return next;
}

ResolutionState blowup_step(const ResolutionState& s) {
  if (is_resolved(s)) throw std::invalid_argument("blow-up requested on a resolved state");
  return blowup_in_chart(s, default_pivot(s.curve));
}

bool is_resolved(const ResolutionState& s) {
  if (s.step < 1) return false;
  if (multiplicity(s.curve) != 1) return false;
  if (s.registry.size() != 1) return false;
  return s.curve.coord(s.registry.begin()->first).order() == 1;
}

ResolutionReport resolve(const Branch& b, int max_steps) {
  ResolutionState state(b);
  ResolutionReport report{.final_curve = b};
  const auto finish = [&](ResolutionStatus status, std::string detail) {
    report.r = state.step;
    report.graph = state.graph();
    report.multiplicities = state.multiplicities;
    report.charts = state.charts;
    report.final_curve = state.curve;
    report.status = status;
    report.detail = std::move(detail);
    return report;
  };
  while (!is_resolved(state)) {
    if (state.step >= max_steps) {
      return finish(ResolutionStatus::StepLimit, "not resolved after " + std::to_string(max_steps) + " blow-ups");
    }
    try {
      state = blowup_step(state);
    } catch (const CurveError& e) {
      // With a valid input every way to run dry is a precision problem.
      return finish(ResolutionStatus::PrecisionExhausted, e.what());
    }
    report.tangency.push_back(tangency_signature(state));
    report.registries.push_back(state.registry);
  }
  return finish(ResolutionStatus::Resolved, {});
}

std::vector<Series> blowdown_coords(std::vector<Series> coords, std::span<const ChartRecord> charts) {
  for (auto it = charts.rbegin(); it != charts.rend(); ++it) {
    const Series& pivot = coords[static_cast<std::size_t>(it->pivot)];
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (static_cast<int>(j) == it->pivot) continue;
      coords[j] = mul_full(coords[j] + Series::constant(it->translation[j], coords[j].precision()), pivot);
    }
  }
  return coords;
}

Branch blowdown(const Branch& curve, std::span<const ChartRecord> charts) {
  std::vector<Series> coords =
      blowdown_coords(std::vector<Series>(curve.coords().begin(), curve.coords().end()), charts);
  int p = coords.front().precision();
  for (const auto& c : coords) p = std::min(p, c.precision());
  for (auto& c : coords) c = c.truncated(p);
  return Branch(std::move(coords));
}

}  // namespace curveres
