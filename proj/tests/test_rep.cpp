#include "doctest.h"

#include "cliffk/error.hpp"
#include "cliffk/rep.hpp"
#include "support/oracles.hpp"

using namespace cliffk;

namespace {

std::size_t oracle_hom(const MatrixRep& a, const MatrixRep& b) {
  return a.field == ScalarField::Real ? oracle::dense_hom_dimension<Rational>(a, b)
                                      : oracle::dense_hom_dimension<Gaussian>(a, b);
}

using Entries = std::vector<std::vector<std::uint64_t>>;

Entries matmul(const Entries& a, const Entries& b) {
  Entries out(a.size(), std::vector<std::uint64_t>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("irreducible representations satisfy the relations") {
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned p = 0; p <= n; ++p)
      for (auto field : {ScalarField::Real, ScalarField::Complex}) {
        const Signature sig{p, n - p};
        const auto reps = irreducible_reps(sig, field);
        const auto d = classify(sig, field);
        REQUIRE(reps.size() == d.factors);
        for (const auto& r : reps) {
          REQUIRE(r.satisfies_relations());
          REQUIRE(r.dim == d.irrep_dimension());
        }
      }
}

TEST_CASE("explicit representation matches the classification") {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned p = 0; p <= n; ++p)
      for (auto field : {ScalarField::Real, ScalarField::Complex}) {
        const auto report = classification_report({p, n - p}, field);
        CHECK(report.ok);
        CHECK(report.faithful_rank == (std::uint64_t{1} << n));
      }
  CHECK_THROWS_AS(verify_classification({5, 4}), BoundError);
}

TEST_CASE("intertwiner dimension agrees with dense elimination") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned p = 0; p <= n; ++p)
      for (auto field : {ScalarField::Real, ScalarField::Complex}) {
        const Signature sig{p, n - p};
        const auto irr = irreducible_reps(sig, field);
        const auto full = build_rep(sig, field);
        const auto doubled = direct_sum(full, irr.front());
        for (const auto* a : {&irr.front(), &irr.back(), &full})
          for (const auto* b : {&irr.front(), &irr.back(), &full, &doubled})
            CHECK(hom_dimension(*a, *b) == oracle_hom(*a, *b));
      }
  // Restricted modules are no longer built from one recursion.
  const auto big = build_rep({3, 1}, ScalarField::Real);
  const auto res = restrict_rep(big, {1, 1});
  for (const auto& s : irreducible_reps({1, 1}, ScalarField::Real))
    CHECK(hom_dimension(s, res) == oracle_hom(s, res));
}

TEST_CASE("hom basis elements intertwine") {
  const auto irr = irreducible_reps({2, 0}, ScalarField::Real).front();
  const auto basis = hom_basis<Rational>(irr, irr);
  CHECK(basis.size() == 4);  // End of H over R
  for (const auto& X : basis)
    for (const auto& g : irr.generators) CHECK(X * g.dense<Rational>() == g.dense<Rational>() * X);
}

TEST_CASE("decompose") {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned p = 0; p <= n; ++p) {
      const auto full = build_rep({p, n - p}, ScalarField::Real);
      for (auto m : decompose(full)) CHECK(m == 1);
    }
  const auto irr = irreducible_reps({0, 1}, ScalarField::Real);
  const auto mod = direct_sum(direct_sum(irr[0], irr[1]), irr[1]);
  CHECK(decompose(mod) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("restriction matrices") {
  auto r = restriction_multiplicities({1, 0}, {0, 0}, ScalarField::Real);
  CHECK(r.entries == Entries{{2}});
  r = restriction_multiplicities({2, 0}, {1, 0}, ScalarField::Real);
  CHECK(r.entries == Entries{{2}});
  r = restriction_multiplicities({3, 0}, {2, 0}, ScalarField::Real);
  CHECK(r.entries == Entries{{1, 1}});
  r = restriction_multiplicities({0, 1}, {0, 0}, ScalarField::Real);
  CHECK(r.entries == Entries{{1, 1}});
  r = restriction_multiplicities({1, 0}, {0, 0}, ScalarField::Complex);
  CHECK(r.entries == Entries{{1, 1}});
  r = restriction_multiplicities({4, 0}, {3, 0}, ScalarField::Real);
  CHECK(r.entries == Entries{{1}, {1}});
  CHECK(r.column_check());
  CHECK_THROWS_AS(restriction_multiplicities({1, 0}, {0, 1}, ScalarField::Real), EmbeddingError);
}

TEST_CASE("restriction is transitive and column sums match dimensions") {
  const auto ab = restriction_multiplicities({4, 0}, {2, 0}, ScalarField::Real);
  const auto bc = restriction_multiplicities({2, 0}, {0, 0}, ScalarField::Real);
  const auto ac = restriction_multiplicities({4, 0}, {0, 0}, ScalarField::Real);
  CHECK(matmul(bc.entries, ab.entries) == ac.entries);
  const auto x = restriction_multiplicities({3, 3}, {2, 1}, ScalarField::Real);
  const auto y = restriction_multiplicities({2, 1}, {1, 0}, ScalarField::Real);
  const auto z = restriction_multiplicities({3, 3}, {1, 0}, ScalarField::Real);
  CHECK(matmul(y.entries, x.entries) == z.entries);
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned p = 0; p <= n; ++p) {
      const Signature big{p, n - p};
      if (p > 0) CHECK(restriction_multiplicities(big, {p - 1, n - p}, ScalarField::Real).column_check());
      if (p < n) CHECK(restriction_multiplicities(big, {p, n - p - 1}, ScalarField::Complex).column_check());
    }
}

TEST_CASE("restriction handles sixteen generators") {
  const auto r = restriction_multiplicities({16, 0}, {15, 0}, ScalarField::Real);
  CHECK(r.column_check());
  CHECK_THROWS_AS(build_rep({17, 0}), BoundError);
}

TEST_CASE("matrix shift isomorphism") {
  for (unsigned m = 0; m <= 5; ++m) {
    const auto r = matrix_shift_iso_report(m);
    CHECK(r.relations);
    CHECK(r.rank == (std::uint64_t{1} << (m + 2)));
    CHECK(r.ok);
    const auto images = matrix_shift_generator_images(m);
    REQUIRE(images.size() == m + 2);
    const Signature l{m, 0}, rr{0, 2};
    const auto one = TensorElement::pure(CliffordElement::scalar(l, Rational(1)), CliffordElement::scalar(rr, Rational(1)));
    for (std::size_t i = 0; i < images.size(); ++i) {
      CHECK(images[i] * images[i] == one);
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        auto s = images[i] * images[j];
        s += images[j] * images[i];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("matrix shift module") {
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) {
      const auto rep = build_rep({a, b});
      const auto shifted = matrix_shift_module(rep);
      CHECK(shifted.sig == Signature{b, a + 2});
      CHECK(shifted.satisfies_relations());
    }
}

TEST_CASE("untwisting by the last generator") {
  for (unsigned n = 0; n <= 4; ++n) {
    const auto r = untwist_report(n);
    CHECK(r.central);
    CHECK(r.involution);
    CHECK(r.idempotents);
    CHECK(r.corner_dims[0] == (std::uint64_t{1} << (n + 1)));
    CHECK(r.corner_dims[1] == (std::uint64_t{1} << (n + 1)));
    CHECK(r.ok);
  }
}
