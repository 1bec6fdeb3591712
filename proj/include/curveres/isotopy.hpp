#pragma once

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

#include "curveres/compare.hpp"

namespace curveres {

using Point = std::vector<std::complex<double>>;

/// eps[i] == 1 iff the hyperplane x_i = 0 is a component of the divisor.
using DivisorFlags = std::vector<int>;

/// A non-singular curve written as a graph over coordinate `pivot`:
/// comps[pivot] is the identity x and comps[i] = a_i(x) otherwise.
struct GraphParam {
  int pivot = 0;
  std::vector<Series> comps;

  int dim() const noexcept { return static_cast<int>(comps.size()); }
  int precision() const;
  /// The same curve as a Branch parametrized by x.
  Branch to_branch() const;
  Point evaluate(std::complex<double> x) const;
};

/// Requires coordinate `pivot` of b to have order exactly 1 (OrderNotOne).
GraphParam graph_parametrize(const Branch& b, int pivot);

bool agree(const GraphParam& g, const GraphParam& h);

enum class FieldMode { LemmaConstant, LemmaExact, Corollary };
std::string_view to_string(FieldMode m) noexcept;

struct ZeroComponent {};
/// dx_i/ds = g(x): time-t flow adds t * g(x).
struct Additive {
  Series shift;
};
/// dx_i/ds = log(factor) * x_i: time-1 flow multiplies by `factor`.
struct LinearConstant {
  ExactComplex factor;
};
/// dx_i/ds = log(u(x)) * x_i: time-1 flow multiplies by the unit u(x).
struct LinearVariable {
  Series unit;
};
using FieldComponent = std::variant<ZeroComponent, Additive, LinearConstant, LinearVariable>;

/// A decoupled vector field whose pivot component vanishes, so the pivot
/// coordinate x is a first integral and every flow has closed form.
struct FieldSpec {
  FieldMode mode = FieldMode::LemmaExact;
  int pivot = 0;
  std::vector<FieldComponent> components;
  /// Component id the pivot hyperplane hosts in corollary mode, else 0.
  int anchor_component = 0;
};

/// Field carrying `from` to a curve tangent to `to` (LemmaConstant) or onto
/// `to` in every moved coordinate (LemmaExact), tangent to every divisor
/// hyperplane flagged in `eps`.
///
/// Throws TangencyMismatch when a flagged coordinate is transverse on one
/// curve and tangent on the other, and std::invalid_argument for mismatched
/// pivots or dimensions.
FieldSpec lemma_field(const GraphParam& from, const GraphParam& to, const DivisorFlags& eps, FieldMode mode);

/// Additive field whose time-1 flow maps `from` onto `to` while fixing the
/// pivot coordinate, used at the last level where both curves are transverse
/// to the component `component_id` hosted by the pivot hyperplane.
FieldSpec corollary_field(const GraphParam& from, const GraphParam& to, int component_id);

/// Exact image of a curve under the time-1 flow.
GraphParam apply_time1(const FieldSpec& f, const GraphParam& g);

struct FlowResult {
  Point point;
  /// A logarithm was taken at a nonpositive real; the principal branch was used.
  bool branch_cut = false;
};

/// Closed-form time-t flow evaluated in double precision.
FlowResult flow_map(const FieldSpec& f, double t, const Point& p);

/// The vector field itself at p (principal logarithms).
Point field_value(const FieldSpec& f, const Point& p);

/// Smooth cutoff: 1 on |p| <= inner, 0 on |p| >= outer, exp(-1/s) blend
/// in between.
struct BumpProfile {
  double inner = 0.25;
  double outer = 0.5;

  double operator()(double radius) const;
};

double euclidean_norm(const Point& p);

/// RK4 integration of bump(|p|) * X(p) from 0 to t. Step count doubles until
/// two successive results differ by less than 1e-9; throws
/// CurveError(StepLimit) if that never happens.
Point blended_flow(const FieldSpec& f, const BumpProfile& bump, double t, const Point& p);

/// One move of the schedule: flow the strict transform at `level` (reached
/// through `charts`) by `field`, then blow back down.
struct ScheduleStep {
  int level = 0;
  std::vector<ChartRecord> charts;
  DivisorFlags eps;
  FieldSpec field;
  GraphParam source;
  int contact_before = 0;
  int contact_after = 0;
};

struct IsotopySchedule {
  int r = 0;
  std::vector<ScheduleStep> steps;
  Branch result;
};

/// Number of shared centers after the origin, plus one more when both towers
/// end at the same point with coinciding strict transforms (the curves are
/// then equal up to precision). Ranges over 0..r+1.
int contact_level(const Branch& b1, const Branch& b2, int max_steps = kDefaultMaxSteps);

/// Equal as curves (not as parametrizations), up to surviving precision.
bool same_curve(const Branch& b1, const Branch& b2, int max_steps = kDefaultMaxSteps);

/// Applies one step to a branch whose tower passes through the step's
/// centers. Throws std::invalid_argument if it does not.
Branch apply_step(const Branch& b, const ScheduleStep& step);

/// Builds flows that move b1 onto b2, level by level. Throws NotEquisingular,
/// LemmaHypothesisUnmet, TangencyMismatch, PrecisionExhausted or StepLimit.
IsotopySchedule make_equal(const Branch& b1, const Branch& b2, FieldMode mode = FieldMode::LemmaExact,
                           int max_steps = kDefaultMaxSteps);

}  // namespace curveres
