#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curveres/branch.hpp"
#include "curveres/dual_graph.hpp"

namespace curveres {

/// Exceptional components through the current center: 0-based coordinate
/// index of the hyperplane hosting the component -> component id (>= 1).
using DivisorRegistry = std::map<int, int>;

enum class Contact { Transverse, Tangent };
std::string_view to_string(Contact c) noexcept;

/// Component id -> contact of the strict transform with that component.
using TangencySignature = std::map<int, Contact>;

/// The chart used by one blow-up: x_j <- x_{pivot} * (x_j + translation_j)
/// for j != pivot, so blowing down inverts it exactly.
struct ChartRecord {
  int pivot = 0;
  std::vector<ExactComplex> translation;  // entry at pivot is 0

  friend bool operator==(const ChartRecord&, const ChartRecord&) = default;
};

/// The i-th level of the blow-up tower, seen from the chart containing the
/// current center (always moved to the origin).
struct ResolutionState {
  explicit ResolutionState(Branch b) : curve(std::move(b)) {}

  int step = 0;
  Branch curve;
  DivisorRegistry registry;
  std::set<DualGraph::Edge> edges;
  std::vector<ChartRecord> charts;
  std::vector<int> multiplicities;

  DualGraph graph() const { return DualGraph(step, edges); }
};

enum class ResolutionStatus { Resolved, PrecisionExhausted, StepLimit };
std::string_view to_string(ResolutionStatus s) noexcept;

inline constexpr int kDefaultMaxSteps = 64;

struct ResolutionReport {
  int r = 0;
  DualGraph graph;
  std::vector<int> multiplicities;
  /// Entry i describes the state after blow-up i + 1.
  std::vector<TangencySignature> tangency;
  std::vector<DivisorRegistry> registries;
  std::vector<ChartRecord> charts;
  Branch final_curve;
  ResolutionStatus status = ResolutionStatus::Resolved;
  std::string detail;
};

/// Minimum known coordinate order. Coordinates vanishing to precision are
/// ignored: with a shared precision p their order is >= p > the minimum.
int multiplicity(const Branch& b);

/// The t^m coefficients, m = multiplicity(b): a representative of the
/// projective tangent direction.
std::vector<ExactComplex> tangent_direction(const Branch& b);

/// Smallest coordinate index attaining the multiplicity.
int default_pivot(const Branch& b);

/// One point blow-up at the origin of the current chart, using the default
/// pivot. Requires !is_resolved(s).
ResolutionState blowup_step(const ResolutionState& s);

/// Same as blowup_step but in the chart of `pivot`, which must attain the
/// multiplicity of s.curve.
ResolutionState blowup_in_chart(const ResolutionState& s, int pivot);

bool is_resolved(const ResolutionState& s);

ResolutionReport resolve(const Branch& b, int max_steps = kDefaultMaxSteps);

/// Pushes a curve living after the last chart of `charts` back down to the
/// original coordinates.
Branch blowdown(const Branch& curve, std::span<const ChartRecord> charts);

/// Blowdown on coordinates that may carry different precisions. Each product
/// keeps every coefficient it determines (mul_full), so precision lost to the
/// common truncation upstairs is partly won back.
std::vector<Series> blowdown_coords(std::vector<Series> coords, std::span<const ChartRecord> charts);

}  // namespace curveres
