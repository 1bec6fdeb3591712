#pragma once

#include <vector>

#include "curveres/resolution.hpp"

namespace curveres {

/// transverse iff the hosting coordinate's order equals the multiplicity;
/// tangent if it is larger or the coordinate vanishes to precision.
TangencySignature tangency_signature(const Branch& curve, const DivisorRegistry& registry);
TangencySignature tangency_signature(const ResolutionState& s);

/// True iff u and v span the same line (all 2x2 minors vanish).
bool projectively_equal(const std::vector<ExactComplex>& u, const std::vector<ExactComplex>& v);

enum class DescentStop { DirectionsDiffer, TranslationsDiffer, Resolved, StepLimit, PrecisionExhausted };

/// Both towers walked in lock-step through the charts chosen for the first
/// branch, stopped at the last shared center.
struct SharedDescent {
  int shared = 0;
  ResolutionState first;
  ResolutionState second;
  DescentStop stop = DescentStop::Resolved;
};

/// Throws CurveError(DimensionMismatch) for branches of different dimension.
/// Running out of precision is reported through `stop`, not thrown.
SharedDescent shared_descent(const Branch& b1, const Branch& b2, int max_steps = kDefaultMaxSteps);

/// Number of shared infinitely near points after the origin. Throws
/// CurveError(PrecisionExhausted) if precision ran out before the towers
/// separated or resolved.
int shared_prefix(const Branch& b1, const Branch& b2, int max_steps = kDefaultMaxSteps);

struct CompareReport {
  bool same_graph = false;
  int shared_prefix = 0;
  int r1 = 0;
  int r2 = 0;
  /// Entry i compares the signatures at shared level i + 1.
  std::vector<bool> signatures_match;
  ResolutionStatus status1 = ResolutionStatus::Resolved;
  ResolutionStatus status2 = ResolutionStatus::Resolved;
  DualGraph graph1;
  DualGraph graph2;
};

/// Resolves both branches (concurrently) and compares their labeled graphs.
CompareReport equisingular(const Branch& b1, const Branch& b2, int max_steps = kDefaultMaxSteps);

}  // namespace curveres
