#include <doctest.h>

#include <random>

#include "curveres/compare.hpp"
#include "curveres/error.hpp"
#include "curveres/resolution.hpp"
#include "oracles.hpp"

using namespace curveres;
using Edges = std::set<DualGraph::Edge>;

namespace {

constexpr int kPrec = 16;

Series mono(int e, long c = 1) { return Series::monomial(ExactComplex(c), e, kPrec); }

Branch branch(std::vector<Series> coords) { return Branch(std::move(coords)); }

Branch poly(std::vector<std::vector<Term>> coords, int prec = kPrec) {
  return Branch::from_polynomials(prec, coords);
}

// State after `step` blow-ups with the given data; charts are placeholders.
ResolutionState state_at(int step, Branch curve, DivisorRegistry registry, Edges edges,
                         std::vector<int> multiplicities) {
  ResolutionState s(std::move(curve));
  s.step = step;
  s.registry = std::move(registry);
  s.edges = std::move(edges);
  s.multiplicities = std::move(multiplicities);
  for (int i = 0; i < step; ++i) s.charts.push_back({0, std::vector<ExactComplex>(s.curve.dim())});
  return s;
}

}  // namespace

TEST_CASE("multiplicity") {
  CHECK(multiplicity(branch({mono(2), mono(3), mono(4)})) == 2);
  CHECK(multiplicity(branch({mono(1), Series::zero(kPrec)})) == 1);
  CHECK(multiplicity(branch({mono(3), mono(7)})) == 3);
}

TEST_CASE("tangent_direction") {
  using V = std::vector<ExactComplex>;
  CHECK(tangent_direction(branch({mono(2), mono(3), mono(4)})) == V{1, 0, 0});
  CHECK(tangent_direction(branch({mono(1), mono(1), mono(1)})) == V{1, 1, 1});
  CHECK(tangent_direction(branch({mono(2), mono(2), mono(3)})) == V{1, 1, 0});
}

TEST_CASE("branch construction is validated") {
  CHECK_THROWS_AS(poly({{{2, 1}}, {{4, 1}}}), CurveError);
  try {
    poly({{{2, 1}}, {{4, 1}}});
  } catch (const CurveError& e) {
    CHECK(std::string(e.what()).find("gcd of exponents is 2") != std::string::npos);
  }
  CHECK_THROWS_AS(poly({{{3, 1}, {2, 1}}, {{5, 1}}}), CurveError);  // not increasing
  CHECK_THROWS_AS(poly({{{2, 1}}, {{16, 1}}}), CurveError);         // exponent >= precision
  CHECK_THROWS_AS(poly({{}, {}}), CurveError);                      // constant germ
  CHECK_THROWS_AS(branch({Series::constant(1, kPrec), mono(1)}), CurveError);
  CHECK_THROWS_AS(branch({mono(1)}), CurveError);
  // Inside an axis the germ is an m-fold cover even with coprime exponents.
  CHECK_THROWS_AS(poly({{}, {{2, 1}, {3, 1}}}), CurveError);
  CHECK_NOTHROW(poly({{}, {{1, 1}, {3, 1}}}));
  // A coefficient of zero does not count towards primitivity.
  CHECK_THROWS_AS(poly({{{2, 1}, {3, 0}}, {{4, 1}}}), CurveError);
}

TEST_CASE("blowup_step on the plane cusp") {
  const ResolutionState s0(branch({mono(2), mono(3)}));
  const ResolutionState s1 = blowup_step(s0);
  CHECK(agree(s1.curve, branch({mono(2), mono(1)})));
  CHECK(s1.registry == DivisorRegistry{{0, 1}});
  CHECK(s1.edges.empty());
  CHECK(s1.multiplicities == std::vector<int>{2});
  CHECK(s1.curve.precision() == kPrec - 2);

  const ResolutionState s2 = state_at(2, branch({mono(1), mono(1)}), {{0, 1}, {1, 2}}, {{1, 2}}, {2, 1});
  const ResolutionState s3 = blowup_step(s2);
  CHECK(agree(s3.curve, branch({mono(1), Series::zero(kPrec)})));
  CHECK(s3.registry == DivisorRegistry{{0, 3}});
  CHECK(s3.edges == Edges{{1, 3}, {2, 3}});
  CHECK(s3.charts.back().translation == std::vector<ExactComplex>{0, 1});
}

TEST_CASE("blowup_step on the space branch") {
  const ResolutionState s1 = state_at(1, branch({mono(2), mono(1), mono(2)}), {{0, 1}}, {}, {2});
  const ResolutionState s2 = blowup_step(s1);
  CHECK(agree(s2.curve, branch({mono(1), mono(1), mono(1)})));
  CHECK(s2.registry == DivisorRegistry{{0, 1}, {1, 2}});
  CHECK(s2.edges == Edges{{1, 2}});
}

TEST_CASE("blowup_step errors") {
  // Precision 4 cannot survive two quadratic divisions.
  const ResolutionState s(poly({{{2, 1}}, {{3, 1}}}, 4));
  const ResolutionState s1 = blowup_step(s);
  CHECK_THROWS_AS(blowup_step(blowup_step(s1)), CurveError);
  const ResolutionState resolved = state_at(3, branch({mono(1), Series::zero(kPrec)}), {{0, 3}}, {}, {2, 1, 1});
  CHECK_THROWS_AS(blowup_step(resolved), std::invalid_argument);
}

TEST_CASE("is_resolved") {
  CHECK_FALSE(is_resolved(ResolutionState(branch({mono(1), Series::zero(kPrec)}))));
  CHECK(is_resolved(state_at(3, branch({mono(1), Series::zero(kPrec)}), {{0, 3}}, {}, {2, 1, 1})));
  CHECK_FALSE(is_resolved(state_at(2, branch({mono(1), mono(1), mono(1)}), {{0, 1}, {1, 2}}, {{1, 2}}, {2, 1})));
  // One component, but the curve is tangent to it.
  CHECK_FALSE(is_resolved(state_at(1, branch({mono(2), mono(1)}), {{0, 1}}, {}, {2})));
}

TEST_CASE("resolve: hand-resolved examples") {
  const auto smooth = resolve(branch({mono(1), Series::zero(kPrec), Series::zero(kPrec)}));
  CHECK(smooth.status == ResolutionStatus::Resolved);
  CHECK(smooth.r == 1);
  CHECK(smooth.graph == DualGraph(1, {}));

  const auto cusp = resolve(branch({mono(2), mono(3)}));
  CHECK(cusp.r == 3);
  CHECK(cusp.graph == DualGraph(3, {{1, 3}, {2, 3}}));
  CHECK(cusp.multiplicities == std::vector<int>{2, 1, 1});
  REQUIRE(cusp.tangency.size() == 3);
  CHECK(cusp.tangency[0] == TangencySignature{{1, Contact::Tangent}});
  CHECK(cusp.tangency[2] == TangencySignature{{3, Contact::Transverse}});

  const auto space = resolve(branch({mono(2), mono(3), mono(4)}));
  CHECK(space.r == 3);
  CHECK(space.graph == DualGraph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(space.multiplicities == std::vector<int>{2, 1, 1});

  // (t^3, t^5): the E_8-type chain of length 4.
  const auto e8 = resolve(branch({mono(3), mono(5)}));
  CHECK(e8.r == 4);
  CHECK(e8.multiplicities == std::vector<int>{3, 2, 1, 1});
  CHECK(e8.graph == DualGraph(4, {{1, 3}, {2, 4}, {3, 4}}));
}

TEST_CASE("resolve reports limits as statuses") {
  const auto limited = resolve(branch({mono(2), mono(3)}), 1);
  CHECK(limited.status == ResolutionStatus::StepLimit);
  CHECK(limited.r == 1);
  const auto starved = resolve(poly({{{2, 1}}, {{3, 1}}}, 4));
  CHECK(starved.status == ResolutionStatus::PrecisionExhausted);
  CHECK_FALSE(starved.detail.empty());
}

TEST_CASE("a zero coordinate never becomes the pivot") {
  const auto rep = resolve(branch({Series::zero(kPrec), mono(2), mono(3)}));
  CHECK(rep.status == ResolutionStatus::Resolved);
  for (const auto& c : rep.charts) CHECK(c.pivot != 0);
  CHECK(rep.graph == DualGraph(3, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("blowdown") {
  const ChartRecord chart{0, {0, 0}};
  CHECK(agree(blowdown(branch({mono(2), mono(1)}), std::span(&chart, 1)), branch({mono(2), mono(3)})));
  const Branch line = branch({mono(1), Series::zero(kPrec)});
  CHECK(agree(blowdown(line, {}), line));
}

TEST_CASE("corpus: structural properties of every resolution") {
  const auto corpus = testing::acceptance_corpus(5);
  for (const Branch& b : corpus) {
    const auto rep = resolve(b);
    INFO(rep.detail);
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    CHECK(agree(blowdown(rep.final_curve, rep.charts), b));
    CHECK(rep.multiplicities.back() == 1);

    ResolutionState s(b);
    Edges removed;
    while (!is_resolved(s)) {
      const ResolutionState next = blowup_step(s);
      // Newest component always passes through the new center.
      bool newest = false;
      for (const auto& [coord, id] : next.registry) newest = newest || id == next.step;
      CHECK(newest);
      if (b.dim() >= 3) {
        for (const auto& e : s.edges) CHECK(next.edges.contains(e));
      } else {
        for (const auto& e : s.edges) {
          if (!next.edges.contains(e)) removed.insert(e);
        }
        for (const auto& e : removed) CHECK_FALSE(next.edges.contains(e));
      }
      s = next;
    }

    if (b.dim() == 3) {
      for (const auto& [i, j, k] : triple_cliques(rep.graph)) {
        // Both earlier components met the center blown up at step k.
        const DivisorRegistry& before = rep.registries[static_cast<std::size_t>(k - 2)];
        bool has_i = false;
        bool has_j = false;
        for (const auto& [coord, id] : before) {
          has_i = has_i || id == i;
          has_j = has_j || id == j;
        }
        CHECK(has_i);
        CHECK(has_j);
      }
    }
  }
}

TEST_CASE("dual graph is invariant under linear changes and reparametrization") {
  std::mt19937_64 rng(21);
  const auto corpus = testing::acceptance_corpus(6);
  for (std::size_t n = 0; n < 50; ++n) {
    const Branch& b = corpus[n];
    const auto base = resolve(b);
    REQUIRE(base.status == ResolutionStatus::Resolved);
    const auto m = testing::random_invertible_matrix(rng, b.dim());
    const auto moved = resolve(testing::linear_change(m, b));
    CHECK(moved.graph == base.graph);
    const auto reparam = resolve(testing::reparametrize(b));
    CHECK(reparam.graph == base.graph);
    CHECK(reparam.multiplicities == base.multiplicities);
  }
}
