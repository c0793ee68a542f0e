#include "doctest.h"

#include "cliffk/error.hpp"
#include "cliffk/ktheory.hpp"
#include "support/oracles.hpp"

using namespace cliffk;

namespace {

FGAbelianGroup G(const char* s) { return FGAbelianGroup::parse(s); }

}  // namespace

TEST_CASE("K_0 and forgetful maps") {
  CHECK(k0({0, 0}, ScalarField::Real) == G("Z"));
  CHECK(k0({3, 0}, ScalarField::Real) == G("Z^2"));
  CHECK(k0({1, 0}, ScalarField::Complex) == G("Z^2"));
  const auto f = forgetful_k_map({{1, 0}, {0, 0}, ScalarField::Real});
  CHECK(f.matrix()(0, 0) == 2);
  CHECK_THROWS_AS(forgetful_k_map({{1, 0}, {0, 1}, ScalarField::Real}), EmbeddingError);
  const auto rel = relative_k({{3, 0}, {2, 0}, ScalarField::Real});
  CHECK(rel.coker.is_trivial());
  CHECK(rel.ker == G("Z"));
}

TEST_CASE("K-theory of a point") {
  const std::vector<const char*> ko{"Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0", "Z"};
  for (unsigned i = 0; i < ko.size(); ++i) CHECK(point_k(i, Theory::KO) == G(ko[i]));
  const std::vector<const char*> ku{"Z", "0", "Z", "0"};
  for (unsigned i = 0; i < ku.size(); ++i) CHECK(point_k(i, Theory::KU) == G(ku[i]));
  for (unsigned i = 0; i + 8 <= 15; ++i) CHECK(point_k(i, Theory::KO) == point_k(i + 8, Theory::KO));
  for (unsigned i = 0; i + 2 <= 7; ++i) CHECK(point_k(i, Theory::KU) == point_k(i + 2, Theory::KU));
}

TEST_CASE("reduced K-theory of RP^n") {
  CHECK(reduced_k_rpn(1, Theory::KO) == G("Z/2"));
  CHECK(reduced_k_rpn(4, Theory::KO) == G("Z/8"));
  CHECK(reduced_k_rpn(2, Theory::KU) == G("Z/2"));
  CHECK(reduced_k_rpn(1, Theory::KU).is_trivial());
  for (unsigned n = 1; n <= 16; ++n) {
    CHECK(adams_f(n) == oracle::adams_count(n));
    const auto g = reduced_k_rpn(n, Theory::KO);
    CHECK(g.is_finite());
    CHECK(*g.order() == Integer(1) << oracle::adams_count(n));
  }
  for (unsigned n = 1; n <= 12; ++n) CHECK(*reduced_k_rpn(n, Theory::KU).order() == Integer(1) << (n / 2));
  CHECK_THROWS(reduced_k_rpn(0, Theory::KO));
}

TEST_CASE("relative groups are Morita invariant") {
  for (unsigned i = 1; i <= 7; ++i)
    for (unsigned h = 1; h <= 3; ++h) {
      const auto base = relative_k({{i, 0}, {i - 1, 0}, ScalarField::Real});
      const auto shifted = relative_k({{i + h, h}, {i - 1 + h, h}, ScalarField::Real});
      CHECK(base.same_groups(shifted));
    }
}

TEST_CASE("Thom stability") {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto r = thom_report(n, 3);
    CHECK(r.comparisons.size() == 4);
    CHECK(r.ok);
  }
}

TEST_CASE("Bott sequence instances are solvable") {
  for (int i = 0; i < 8; ++i) {
    const auto s = bott_sequence_instance(i);
    CHECK(s.terms[1].group == point_k(static_cast<unsigned>(i), Theory::KO));
    CHECK(!solve_exact(s, kSequenceBound).empty());
  }
  const auto s0 = bott_sequence_instance(0);
  CHECK(s0.terms[0].name == "KU^0");
  CHECK(s0.terms[3].name == "KU^1");
  const auto sols = solve_exact(s0, kSequenceBound);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].maps[0].matrix()(0, 0) == -2);
  CHECK(sols[1].maps[0].matrix()(0, 0) == 2);
  CHECK(bott_sequence_instance(4).terms[3].group->is_trivial());
  CHECK(bott_sequence_instance(8) == bott_sequence_instance(0));
}

TEST_CASE("KR to KO_G sequence over a point at degree 2") {
  const auto s = equivariant_sequence_point_instance(2);
  CHECK(s.terms[0].group == G("Z"));
  CHECK(s.terms[1].group == G("Z/2"));
  CHECK(s.terms[2].group == G("0"));
  CHECK(!solve_exact(s, kSequenceBound).empty());
}

TEST_CASE("fiber checks") {
  const auto r = fiber_twist_check();
  REQUIRE(r.checks.size() == 4);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(r.ok());
  CHECK(r.top_then_right == r.left_then_bottom);
  CHECK(r.top_then_right(0, 0) == 2);
}
