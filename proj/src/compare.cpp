#include "curveres/compare.hpp"

#include <future>

#include "curveres/error.hpp"

namespace curveres {

TangencySignature tangency_signature(const Branch& curve, const DivisorRegistry& registry) {
  const int m = multiplicity(curve);
  TangencySignature sig;
  for (const auto& [coord, id] : registry) {
    sig[id] = curve.coord(coord).order() == m ? Contact::Transverse : Contact::Tangent;
  }
  return sig;
}

TangencySignature tangency_signature(const ResolutionState& s) { return tangency_signature(s.curve, s.registry); }

bool projectively_equal(const std::vector<ExactComplex>& u, const std::vector<ExactComplex>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

SharedDescent shared_descent(const Branch& b1, const Branch& b2, int max_steps) {
  if (b1.dim() != b2.dim()) {
    throw CurveError(ErrorKind::DimensionMismatch,
                     "dimensions " + std::to_string(b1.dim()) + " and " + std::to_string(b2.dim()));
  }
  SharedDescent d{.first = ResolutionState(b1), .second = ResolutionState(b2)};
  while (true) {
    if (is_resolved(d.first) || is_resolved(d.second)) {
      d.stop = DescentStop::Resolved;
      return d;
    }
    if (d.shared >= max_steps) {
      d.stop = DescentStop::StepLimit;
      return d;
    }
    if (!projectively_equal(tangent_direction(d.first.curve), tangent_direction(d.second.curve))) {
      d.stop = DescentStop::DirectionsDiffer;
      return d;
    }
    // The shared direction has a nonzero pivot component, so the first
    // branch's chart also contains the second branch's next center.
    const int pivot = default_pivot(d.first.curve);
    try {
      ResolutionState n1 = blowup_in_chart(d.first, pivot);
      ResolutionState n2 = blowup_in_chart(d.second, pivot);
      if (n1.charts.back().translation != n2.charts.back().translation) {
        d.stop = DescentStop::TranslationsDiffer;
        return d;
      }
      d.first = std::move(n1);
      d.second = std::move(n2);
    } catch (const CurveError& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted && e.kind() != ErrorKind::DegenerateCurve) throw;
      d.stop = DescentStop::PrecisionExhausted;
      return d;
    }
    ++d.shared;
  }
}

int shared_prefix(const Branch& b1, const Branch& b2, int max_steps) {
  const SharedDescent d = shared_descent(b1, b2, max_steps);
  if (d.stop == DescentStop::PrecisionExhausted) {
    throw CurveError(ErrorKind::PrecisionExhausted,
                     "precision ran out after " + std::to_string(d.shared) + " shared centers");
  }
  return d.shared;
}

CompareReport equisingular(const Branch& b1, const Branch& b2, int max_steps) {
  if (b1.dim() != b2.dim()) {
    throw CurveError(ErrorKind::DimensionMismatch,
                     "dimensions " + std::to_string(b1.dim()) + " and " + std::to_string(b2.dim()));
  }
  auto second = std::async(std::launch::async, [&] { return resolve(b2, max_steps); });
  const ResolutionReport rep1 = resolve(b1, max_steps);
  const ResolutionReport rep2 = second.get();

  CompareReport out;
  out.r1 = rep1.r;
  out.r2 = rep2.r;
  out.status1 = rep1.status;
  out.status2 = rep2.status;
  out.graph1 = rep1.graph;
  out.graph2 = rep2.graph;
  out.same_graph = rep1.status == ResolutionStatus::Resolved && rep2.status == ResolutionStatus::Resolved &&
                   equals_labeled(rep1.graph, rep2.graph);
  out.shared_prefix = shared_descent(b1, b2, max_steps).shared;
  const std::size_t levels = std::min({static_cast<std::size_t>(out.shared_prefix), rep1.tangency.size(),
                                       rep2.tangency.size()});
  for (std::size_t i = 0; i < levels; ++i) out.signatures_match.push_back(rep1.tangency[i] == rep2.tangency[i]);
  return out;
}

}  // namespace curveres
