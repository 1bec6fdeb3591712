#include "curveres/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curveres {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational small_rational(std::mt19937_64& rng) {
  int num = pick(rng, 1, 3) * (pick(rng, 0, 1) == 0 ? 1 : -1);
  Rational q(num, pick(rng, 1, 3));
  q.canonicalize();
  return q;
}

ExactComplex small_coefficient(std::mt19937_64& rng) {
  if (pick(rng, 0, 3) == 0) return {small_rational(rng), small_rational(rng)};
  return {small_rational(rng)};
}

}  // namespace

BranchFile random_branch_file(std::mt19937_64& rng, const CorpusOptions& options) {
  if (options.dim < 2 || options.max_multiplicity < 1 || options.max_degree < options.max_multiplicity ||
      options.precision <= options.max_degree) {
    throw std::invalid_argument("inconsistent corpus options");
  }
  while (true) {
    const int m = pick(rng, 1, options.max_multiplicity);
    const int lead = pick(rng, 0, options.dim - 1);
    BranchFile f{.dim = options.dim, .precision = options.precision};
    int g = 0;
    for (int i = 0; i < options.dim; ++i) {
      // The lead coordinate is a bare monomial t^m so the gcd test below is
      // exactly primitivity.
      std::set<int> exps;
      if (i == lead) {
        exps.insert(m);
      } else {
        const int extra = pick(rng, 0, 2);
        for (int k = 0; k < extra; ++k) exps.insert(pick(rng, m, options.max_degree));
      }
      std::vector<Term> terms;
      for (int e : exps) {
        terms.push_back({e, small_coefficient(rng)});
        g = std::gcd(g, e);
      }
      f.coordinates.push_back(std::move(terms));
    }
    if (g == 1) return f;
  }
}

std::vector<BranchFile> seeded_corpus(std::uint64_t seed, int count, int max_multiplicity, int max_degree,
                                      int precision) {
  std::mt19937_64 rng(seed);
  std::vector<BranchFile> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(random_branch_file(rng, {.dim = 2 + i % 2,
                                           .max_multiplicity = max_multiplicity,
                                           .max_degree = max_degree,
                                           .precision = precision}));
  }
  return out;
}

}  // namespace curveres
