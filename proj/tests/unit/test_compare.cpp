#include <doctest.h>

#include <random>

#include "curveres/compare.hpp"
#include "curveres/error.hpp"
#include "curveres/io.hpp"
#include "oracles.hpp"

using namespace curveres;

namespace {

constexpr int kPrec = 24;

Branch poly(std::vector<std::vector<Term>> coords) { return Branch::from_polynomials(kPrec, coords); }

Series mono(int e, long c = 1) { return Series::monomial(ExactComplex(c), e, kPrec); }

}  // namespace

TEST_CASE("tangency_signature") {
  const Branch b({mono(2), mono(1), mono(2)});
  CHECK(tangency_signature(b, {{0, 1}}) == TangencySignature{{1, Contact::Tangent}});
  const Branch line({mono(1), Series::zero(kPrec)});
  CHECK(tangency_signature(line, {{0, 3}}) == TangencySignature{{3, Contact::Transverse}});
  CHECK(tangency_signature(line, {{1, 3}}) == TangencySignature{{3, Contact::Tangent}});
  const Branch diagonal({mono(1), mono(1), mono(1)});
  CHECK(tangency_signature(diagonal, {{0, 1}, {1, 2}}) ==
        TangencySignature{{1, Contact::Transverse}, {2, Contact::Transverse}});
}

TEST_CASE("projective equality of directions") {
  using V = std::vector<ExactComplex>;
  CHECK(projectively_equal(V{1, 0, 0}, V{-3, 0, 0}));
  CHECK(projectively_equal(V{2, ExactComplex(0, 2)}, V{1, ExactComplex(0, 1)}));
  CHECK_FALSE(projectively_equal(V{0, 1, 0}, V{0, 0, 1}));
  CHECK_FALSE(projectively_equal(V{1, 1}, V{1, -1}));
}

TEST_CASE("shared_prefix: hand examples") {
  CHECK(shared_prefix(poly({{{1, 1}}, {}, {}}), poly({{}, {{1, 1}}, {}})) == 0);
  CHECK(shared_prefix(poly({{{2, 1}}, {{3, 1}}, {}}), poly({{{2, 1}}, {}, {{3, 1}}})) == 1);
  // t -> -t carries one onto the other: they are the same germ.
  CHECK(shared_prefix(poly({{{2, 1}}, {{3, 1}}, {}}), poly({{{2, 1}}, {{3, -1}}, {}})) == 3);
  // Scaling by 2 changes the third-level direction (2:1:1) against (1:1:1).
  CHECK(shared_prefix(poly({{{2, 2}}, {{3, 2}}, {{4, 2}}}), poly({{{2, 1}}, {{3, 1}}, {{4, 1}}})) == 2);
  CHECK_THROWS_AS(shared_prefix(poly({{{2, 1}}, {{3, 1}}}), poly({{{2, 1}}, {{3, 1}}, {}})), CurveError);
}

TEST_CASE("equisingular: hand examples") {
  const Branch cusp = poly({{{2, 1}}, {{3, 1}}});
  const auto same = equisingular(cusp, poly({{{2, 1}}, {{3, 1}, {4, 1}}}));
  CHECK(same.same_graph);
  CHECK(same.r1 == 3);
  CHECK(same.r2 == 3);
  CHECK(same.shared_prefix == 3);  // both cross E3 at the same point

  const auto other = equisingular(cusp, poly({{{1, 1}}, {}}));
  CHECK_FALSE(other.same_graph);
  CHECK(other.r2 == 1);
  CHECK(other.shared_prefix == 1);  // same tangent line

  const auto scaled = equisingular(poly({{{2, 2}}, {{3, 2}}, {{4, 2}}}), poly({{{2, 1}}, {{3, 1}}, {{4, 1}}}));
  CHECK(scaled.same_graph);
  CHECK(scaled.shared_prefix == 2);

  // Contact with E1 differs at the first shared level.
  const auto split = equisingular(cusp, poly({{{2, 1}}, {{5, 1}}}));
  REQUIRE_FALSE(split.signatures_match.empty());
  CHECK_FALSE(split.signatures_match[0]);
  CHECK_FALSE(split.same_graph);

  try {
    equisingular(cusp, poly({{{1, 1}}, {}, {}}));
    FAIL("expected DimensionMismatch");
  } catch (const CurveError& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("corpus: self comparison and symmetry") {
  const auto corpus = testing::acceptance_corpus(8);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Branch& b = corpus[i];
    const auto rep = resolve(b);
    CHECK(shared_prefix(b, b) == rep.r);
    const Branch& c = corpus[(i + 2) % corpus.size()];  // same dimension
    CHECK(shared_prefix(b, c) == shared_prefix(c, b));
  }
}

TEST_CASE("corpus: perturbed pairs") {
  std::mt19937_64 rng(9);
  const auto files = seeded_corpus(10, 60);
  int mismatched = 0;
  for (const auto& f : files) {
    for (int k = 0; k < 3; ++k) {
      const Branch a = to_branch(f);
      const Branch b = to_branch(testing::perturb(rng, f));
      const auto rep = equisingular(a, b);
      REQUIRE(rep.status1 == ResolutionStatus::Resolved);
      REQUIRE(rep.status2 == ResolutionStatus::Resolved);
      CHECK(rep.shared_prefix <= std::min(rep.r1, rep.r2));
      CHECK(rep.shared_prefix == shared_prefix(b, a));
      for (bool match : rep.signatures_match) {
        if (!match) {
          ++mismatched;
          CHECK_FALSE(rep.same_graph);
        }
      }
      const SharedDescent d = shared_descent(a, b);
      CHECK(d.first.registry == d.second.registry);
      CHECK(d.first.edges == d.second.edges);
    }
  }
  // The property must actually be exercised.
  CHECK(mismatched > 0);
}
