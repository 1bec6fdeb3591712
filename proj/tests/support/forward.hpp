#pragma once

#include <optional>
#include <random>

#include "curveres/isotopy.hpp"

namespace curveres::testing {

/// A target built from `base` by flowing its strict transform at `level`
/// with a random exact-mode field and blowing down.
struct ForwardPair {
  Branch base;
  Branch target;
  ScheduleStep step;
};

/// Random divisor-preserving field at a level where the strict transform is
/// non-singular: additive shifts (vanishing at 0) in free coordinates, unit
/// multipliers on transverse divisor coordinates, zero elsewhere.
FieldSpec random_exact_field(std::mt19937_64& rng, const ResolutionState& state);

/// Two graph-parametrized non-singular curves over the same pivot whose
/// flagged coordinates have matching tangency, as the lemma field requires.
struct LemmaPair {
  GraphParam from;
  GraphParam to;
  DivisorFlags eps;
};

LemmaPair random_lemma_pair(std::mt19937_64& rng, int dim, int precision);

/// Retries until the target is equisingular with, but different from, base.
std::optional<ForwardPair> forward_pair(std::mt19937_64& rng, const Branch& base, int attempts = 40);

}  // namespace curveres::testing
