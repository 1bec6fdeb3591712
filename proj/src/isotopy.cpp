#include "curveres/isotopy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curveres/error.hpp"

namespace curveres {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_compatible(const GraphParam& g, const GraphParam& h) {
  if (g.dim() != h.dim()) throw std::invalid_argument("graph parametrizations differ in dimension");
  if (g.pivot != h.pivot) throw std::invalid_argument("graph parametrizations use different pivots");
}

// Order >= 2 or vanishing: the coordinate does not contribute to the tangent.
bool flat_at_origin(const Series& a) {
  if (const auto k = a.order()) return *k >= 2;
  if (a.precision() < 2) throw CurveError(ErrorKind::OrderUnknown, "cannot tell order 1 from order >= 2");
  return true;
}

std::complex<double> principal_log(std::complex<double> z, bool& branch_cut) {
  if (z.imag() == 0.0 && z.real() <= 0.0) branch_cut = true;
  return std::log(z);
}

Point rk4(const FieldSpec& f, const BumpProfile& bump, double t, const Point& start, int steps) {
  const double h = t / steps;
  Point y = start;
  const auto rhs = [&](const Point& p) {
    Point v = field_value(f, p);
    const double w = bump(euclidean_norm(p));
    for (auto& c : v) c *= w;
    return v;
  };
  const auto axpy = [](const Point& base, const Point& dir, double s) {
    Point out = base;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * dir[i];
    return out;
  };
  for (int n = 0; n < steps; ++n) {
    const Point k1 = rhs(y);
    const Point k2 = rhs(axpy(y, k1, h / 2));
    const Point k3 = rhs(axpy(y, k2, h / 2));
    const Point k4 = rhs(axpy(y, k3, h));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return y;
}

DivisorFlags flags_of(const DivisorRegistry& registry, int dim) {
  DivisorFlags eps(static_cast<std::size_t>(dim), 0);
  for (const auto& [coord, id] : registry) eps[static_cast<std::size_t>(coord)] = 1;
  return eps;
}

bool both_resolved_together(const SharedDescent& d) {
  return d.stop == DescentStop::Resolved && is_resolved(d.first) && is_resolved(d.second);
}

bool transforms_coincide(const SharedDescent& d) {
  if (!both_resolved_together(d)) return false;
  const int p = d.first.registry.begin()->first;
  return agree(graph_parametrize(d.first.curve, p), graph_parametrize(d.second.curve, p));
}

int contact_of(const SharedDescent& d) { return d.shared + (transforms_coincide(d) ? 1 : 0); }

SharedDescent descend_or_throw(const Branch& b1, const Branch& b2, int max_steps) {
  SharedDescent d = shared_descent(b1, b2, max_steps);
  if (d.stop == DescentStop::PrecisionExhausted) {
    throw CurveError(ErrorKind::PrecisionExhausted,
                     "precision ran out after " + std::to_string(d.shared) + " shared centers");
  }
  if (d.stop == DescentStop::StepLimit) throw CurveError(ErrorKind::StepLimit, "shared descent hit the step limit");
  return d;
}

}  // namespace

std::string_view to_string(FieldMode m) noexcept {
  switch (m) {
    case FieldMode::LemmaConstant: return "lemma-constant";
    case FieldMode::LemmaExact: return "lemma-exact";
    case FieldMode::Corollary: return "corollary";
  }
  return "unknown";
}

int GraphParam::precision() const {
  int p = comps.front().precision();
  for (const auto& c : comps) p = std::min(p, c.precision());
  return p;
}

Branch GraphParam::to_branch() const {
  const int p = precision();
  std::vector<Series> coords;
  coords.reserve(comps.size());
  for (const auto& c : comps) coords.push_back(c.truncated(p));
  return Branch(std::move(coords));
}

Point GraphParam::evaluate(std::complex<double> x) const {
  Point out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(evaluate_numeric(c, x));
  return out;
}

GraphParam graph_parametrize(const Branch& b, int pivot) {
  if (pivot < 0 || pivot >= b.dim()) throw std::invalid_argument("pivot out of range");
  if (b.coord(pivot).order() != 1) {
    throw CurveError(ErrorKind::OrderNotOne, "coordinate " + std::to_string(pivot + 1) + " is not of order 1");
  }
  const Series t = reversion(b.coord(pivot));
  GraphParam g{.pivot = pivot};
  for (int i = 0; i < b.dim(); ++i) {
    g.comps.push_back(i == pivot ? Series::identity(b.precision()) : compose(b.coord(i), t));
  }
  return g;
}

bool agree(const GraphParam& g, const GraphParam& h) {
  if (g.pivot != h.pivot || g.dim() != h.dim()) return false;
  for (int i = 0; i < g.dim(); ++i) {
    if (!agree(g.comps[i], h.comps[i])) return false;
  }
  return true;
}

FieldSpec lemma_field(const GraphParam& from, const GraphParam& to, const DivisorFlags& eps, FieldMode mode) {
  require_compatible(from, to);
  if (static_cast<int>(eps.size()) != from.dim()) throw std::invalid_argument("divisor flags of wrong length");
  if (mode == FieldMode::Corollary) throw std::invalid_argument("lemma_field takes a lemma mode");

  FieldSpec f{.mode = mode, .pivot = from.pivot};
  for (int i = 0; i < from.dim(); ++i) {
    const Series& a = from.comps[i];
    const Series& b = to.comps[i];
    if (i == from.pivot) {
      f.components.emplace_back(ZeroComponent{});
    } else if (eps[i] == 0) {
      f.components.emplace_back(Additive{b - a});
    } else {
      const bool a_flat = flat_at_origin(a);
      const bool b_flat = flat_at_origin(b);
      if (a_flat != b_flat) {
        throw CurveError(ErrorKind::TangencyMismatch,
                         "coordinate " + std::to_string(i + 1) + " is tangent to the divisor on one curve only");
      }
      if (a_flat) {
        f.components.emplace_back(ZeroComponent{});
      } else if (mode == FieldMode::LemmaConstant) {
        f.components.emplace_back(LinearConstant{b[1] / a[1]});
      } else {
        f.components.emplace_back(LinearVariable{divide(b, a)});
      }
    }
  }
  return f;
}

FieldSpec corollary_field(const GraphParam& from, const GraphParam& to, int component_id) {
  require_compatible(from, to);
  FieldSpec f{.mode = FieldMode::Corollary, .pivot = from.pivot, .anchor_component = component_id};
  for (int i = 0; i < from.dim(); ++i) {
    Series diff = to.comps[i] - from.comps[i];
    if (i == from.pivot || diff.vanishes()) {
      f.components.emplace_back(ZeroComponent{});
    } else {
      f.components.emplace_back(Additive{std::move(diff)});
    }
  }
  return f;
}

GraphParam apply_time1(const FieldSpec& f, const GraphParam& g) {
  if (f.pivot != g.pivot || static_cast<int>(f.components.size()) != g.dim()) {
    throw std::invalid_argument("field was not built for this parametrization");
  }
  GraphParam out = g;
  for (int i = 0; i < g.dim(); ++i) {
    Series& c = out.comps[i];
    std::visit(Overloaded{
                   [](const ZeroComponent&) {},
                   [&](const Additive& a) { c = c + a.shift; },
                   [&](const LinearConstant& l) { c = l.factor * c; },
                   [&](const LinearVariable& l) { c = l.unit * c; },
               },
               f.components[i]);
  }
  return out;
}

FlowResult flow_map(const FieldSpec& f, double t, const Point& p) {
  if (p.size() != f.components.size()) throw std::invalid_argument("point of wrong dimension");
  FlowResult out{.point = p};
  const std::complex<double> x = p[static_cast<std::size_t>(f.pivot)];
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto& y = out.point[i];
    std::visit(Overloaded{
                   [](const ZeroComponent&) {},
                   [&](const Additive& a) { y += t * evaluate_numeric(a.shift, x); },
                   [&](const LinearConstant& l) {
                     y *= std::exp(t * principal_log(l.factor.to_complex(), out.branch_cut));
                   },
                   [&](const LinearVariable& l) {
                     y *= std::exp(t * principal_log(evaluate_numeric(l.unit, x), out.branch_cut));
                   },
               },
               f.components[i]);
  }
  return out;
}

Point field_value(const FieldSpec& f, const Point& p) {
  if (p.size() != f.components.size()) throw std::invalid_argument("point of wrong dimension");
  const std::complex<double> x = p[static_cast<std::size_t>(f.pivot)];
  Point v(p.size());
  bool ignored = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    v[i] = std::visit(Overloaded{
                          [](const ZeroComponent&) { return std::complex<double>{}; },
                          [&](const Additive& a) { return evaluate_numeric(a.shift, x); },
                          [&](const LinearConstant& l) {
                            return p[i] * principal_log(l.factor.to_complex(), ignored);
                          },
                          [&](const LinearVariable& l) {
                            return p[i] * principal_log(evaluate_numeric(l.unit, x), ignored);
                          },
                      },
                      f.components[i]);
  }
  return v;
}

double BumpProfile::operator()(double radius) const {
  if (radius <= inner) return 1.0;
  if (radius >= outer) return 0.0;
  const double a = (outer - radius) / (outer - inner);
  const double b = 1.0 - a;
  const double pa = std::exp(-1.0 / a);
  const double pb = std::exp(-1.0 / b);
  return pa / (pa + pb);
}

double euclidean_norm(const Point& p) {
  double s = 0.0;
  for (const auto& c : p) s += std::norm(c);
  return std::sqrt(s);
}

Point blended_flow(const FieldSpec& f, const BumpProfile& bump, double t, const Point& p) {
  if (!(bump.inner > 0.0 && bump.inner < bump.outer)) throw std::invalid_argument("bump needs 0 < inner < outer");
  constexpr int kMaxSteps = 1 << 16;
  Point previous = rk4(f, bump, t, p, 16);
  for (int steps = 32; steps <= kMaxSteps; steps *= 2) {
    Point current = rk4(f, bump, t, p, steps);
    Point diff = current;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= previous[i];
    if (euclidean_norm(diff) < 1e-9) return current;
    previous = std::move(current);
  }
  throw CurveError(ErrorKind::StepLimit, "RK4 did not settle within " + std::to_string(kMaxSteps) + " steps");
}

int contact_level(const Branch& b1, const Branch& b2, int max_steps) {
  return contact_of(descend_or_throw(b1, b2, max_steps));
}

bool same_curve(const Branch& b1, const Branch& b2, int max_steps) {
  return transforms_coincide(descend_or_throw(b1, b2, max_steps));
}

Branch apply_step(const Branch& b, const ScheduleStep& step) {
  ResolutionState state(b);
  for (const ChartRecord& chart : step.charts) {
    state = blowup_in_chart(state, chart.pivot);
    if (state.charts.back() != chart) throw std::invalid_argument("branch does not pass through the step's centers");
  }
  GraphParam moved = apply_time1(step.field, graph_parametrize(state.curve, step.field.pivot));
  // The pivot is x itself, known exactly; only the base bounds what the
  // blown-down curve can claim to know.
  moved.comps[static_cast<std::size_t>(moved.pivot)] = Series::identity(b.precision());
  std::vector<Series> coords = blowdown_coords(std::move(moved.comps), step.charts);
  int p = b.precision();
  for (const auto& c : coords) p = std::min(p, c.precision());
  for (auto& c : coords) c = c.truncated(p);
  return Branch(std::move(coords));
}

IsotopySchedule make_equal(const Branch& b1, const Branch& b2, FieldMode mode, int max_steps) {
  if (mode == FieldMode::Corollary) throw std::invalid_argument("make_equal takes a lemma mode");
  const CompareReport cmp = equisingular(b1, b2, max_steps);
  for (auto status : {cmp.status1, cmp.status2}) {
    if (status == ResolutionStatus::PrecisionExhausted) {
      throw CurveError(ErrorKind::PrecisionExhausted, "a branch could not be resolved at its precision");
    }
    if (status == ResolutionStatus::StepLimit) throw CurveError(ErrorKind::StepLimit, "a branch hit the step limit");
  }
  if (!cmp.same_graph) throw CurveError(ErrorKind::NotEquisingular, "dual graphs differ");

  IsotopySchedule schedule{.r = cmp.r1, .result = b1};
  // Contact rises by at least one per step and is bounded by r + 1.
  for (int guard = 0; guard <= schedule.r + 1; ++guard) {
    const SharedDescent d = descend_or_throw(schedule.result, b2, max_steps);
    const int before = contact_of(d);
    if (before == schedule.r + 1) return schedule;

    ScheduleStep step{.level = d.shared, .charts = d.first.charts};
    if (both_resolved_together(d)) {
      const auto [coord, id] = *d.first.registry.begin();
      step.eps = DivisorFlags(static_cast<std::size_t>(b1.dim()), 0);
      step.eps[static_cast<std::size_t>(coord)] = 1;
      step.source = graph_parametrize(d.first.curve, coord);
      step.field = corollary_field(step.source, graph_parametrize(d.second.curve, coord), id);
    } else if (d.stop == DescentStop::Resolved) {
      throw CurveError(ErrorKind::LemmaHypothesisUnmet, "towers end at different levels");
    } else {
      int pivot = -1;
      for (int i = 0; i < b1.dim() && pivot < 0; ++i) {
        if (d.first.curve.coord(i).order() == 1 && d.second.curve.coord(i).order() == 1) pivot = i;
      }
      if (pivot < 0) {
        throw CurveError(ErrorKind::LemmaHypothesisUnmet,
                         "strict transforms at level " + std::to_string(d.shared) +
                             " are singular or share no transverse coordinate");
      }
      step.eps = flags_of(d.first.registry, b1.dim());
      step.source = graph_parametrize(d.first.curve, pivot);
      step.field = lemma_field(step.source, graph_parametrize(d.second.curve, pivot), step.eps, mode);
    }

    step.contact_before = before;
    schedule.result = apply_step(schedule.result, step);
    step.contact_after = contact_level(schedule.result, b2, max_steps);
    if (step.contact_after <= before) {
      throw CurveError(ErrorKind::LemmaHypothesisUnmet,
                       "flow at level " + std::to_string(step.level) + " did not raise the contact");
    }
    schedule.steps.push_back(std::move(step));
  }
  throw CurveError(ErrorKind::LemmaHypothesisUnmet, "schedule did not converge");
}

}  // namespace curveres
