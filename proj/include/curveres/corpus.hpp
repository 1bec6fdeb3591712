#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curveres/io.hpp"

namespace curveres {

struct CorpusOptions {
  int dim = 2;
  int max_multiplicity = 4;
  int max_degree = 9;
  int precision = 32;
};

/// Random primitive polynomial branch with small Gaussian-rational
/// coefficients. Only raw engine output is used so a seed yields the same
/// branch with any standard library.
BranchFile random_branch_file(std::mt19937_64& rng, const CorpusOptions& options);

/// `count` branches alternating between dimension 2 and 3.
std::vector<BranchFile> seeded_corpus(std::uint64_t seed, int count, int max_multiplicity = 4, int max_degree = 9,
                                      int precision = 32);

}  // namespace curveres
