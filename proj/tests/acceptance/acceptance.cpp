// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cliffk/abgroup.hpp"
#include "cliffk/ktheory.hpp"
#include "cliffk/rep.hpp"
#include "cliffk/structure.hpp"
#include "support/oracles.hpp"

using namespace cliffk;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.require(false, "took longer than " + std::to_string(limit_seconds) + " s");
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << timing;
  if (limit_seconds > 0) std::cout << ", limit " << limit_seconds << " s";
  std::cout << ")";
  if (!o.ok) std::cout << ": " << o.note;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

std::string sig_name(unsigned p, unsigned q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

FGAbelianGroup G(const char* s) { return FGAbelianGroup::parse(s); }

}  // namespace

int main() {
  criterion(1, "classification suite for p+q <= 8, both fields", 30, [] {
    Outcome o;
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned p = 0; p <= n; ++p)
        for (auto field : {ScalarField::Real, ScalarField::Complex}) {
          const Signature sig{p, n - p};
          const auto d = classify(sig, field);
          o.require(d.factors * d.matrix_size * d.matrix_size * d.ring_dimension() == (std::uint64_t{1} << n),
                    "dimension identity at " + sig_name(p, n - p));
          o.require(verify_classification(sig, field), "verify_classification at " + sig_name(p, n - p) + " over " +
                                                           to_string(field));
        }
    return o;
  });

  criterion(2, "C^{0,m+2} ≅ C^{m,0} ⊗ C^{0,2} for m = 0..5", 10, [] {
    Outcome o;
    for (unsigned m = 0; m <= 5; ++m) {
      const auto r = matrix_shift_iso_report(m);
      o.require(r.relations && r.rank == (std::uint64_t{1} << (m + 2)) && r.ok, "m = " + std::to_string(m));
    }
    return o;
  });

  criterion(3, "order of reduced KO(RP^n) and KU(RP^n)", 10, [] {
    Outcome o;
    for (unsigned n = 1; n <= 16; ++n) {
      const auto g = reduced_k_rpn(n, Theory::KO);
      o.require(g.order() == Integer(1) << oracle::adams_count(n), "KO, n = " + std::to_string(n));
    }
    for (unsigned n = 1; n <= 12; ++n) {
      const auto g = reduced_k_rpn(n, Theory::KU);
      o.require(g.order() == Integer(1) << (n / 2), "KU, n = " + std::to_string(n));
    }
    return o;
  });

  criterion(4, "K-groups of a point: periods 8 and 2, classical KO row", 0, [] {
    Outcome o;
    std::vector<FGAbelianGroup> ko, ku;
    for (unsigned i = 0; i <= 15; ++i) ko.push_back(point_k(i, Theory::KO));
    for (unsigned i = 0; i <= 7; ++i) ku.push_back(point_k(i, Theory::KU));
    for (unsigned i = 0; i + 8 <= 15; ++i) o.require(ko[i] == ko[i + 8], "KO period at " + std::to_string(i));
    for (unsigned i = 0; i + 2 <= 7; ++i) o.require(ku[i] == ku[i + 2], "KU period at " + std::to_string(i));
    const std::vector<const char*> row{"Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0"};
    for (unsigned i = 0; i < 8; ++i) o.require(ko[i] == G(row[i]), "KO^{-" + std::to_string(i) + "}");
    o.require(ku[0] == G("Z") && ku[1].is_trivial(), "KU row");
    return o;
  });

  criterion(5, "Thom stability for n = 0..3, r <= 3", 0, [] {
    Outcome o;
    for (unsigned n = 0; n <= 3; ++n) o.require(thom_stability(n, 3), "n = " + std::to_string(n));
    return o;
  });

  criterion(6, "Bott sequence solvable in degrees 0..7; degree 0 solutions exactly r = ±2, η = 1, c = 0", 5, [] {
    Outcome o;
    for (int i = 0; i < 8; ++i)
      o.require(!solve_exact(bott_sequence_instance(i), kSequenceBound).empty(), "degree " + std::to_string(i));
    const auto sols = solve_exact(bott_sequence_instance(0), kSequenceBound);
    std::vector<long> rs;
    bool rest = true;
    for (const auto& a : sols) {
      rs.push_back(a.maps[0].matrix()(0, 0).get_si());
      rest = rest && a.maps[1].matrix().rows() == 1 && a.maps[1].matrix()(0, 0) == 1 && a.maps[2].is_zero();
    }
    o.require(rs == std::vector<long>{-2, 2} && rest, "degree 0 solution set");
    return o;
  });

  criterion(7, "fiber checks for the twist by a trivial line", 0, [] {
    Outcome o;
    const auto r = fiber_twist_check();
    o.require(r.checks.size() == 4, "four sub-checks");
    for (const auto& c : r.checks) o.require(c.passed, c.name + ": " + c.detail);
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    o.require(r.top_then_right == two && r.left_then_bottom == two, "both composites equal [2]");
    return o;
  });

  criterion(8, "Smith normal form properties and exactness against element-level oracle", 60, [] {
    Outcome o;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<long> entry(-20, 20);
    for (int t = 0; t < 500 && o.ok; ++t) {
      IntMatrix m(dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
      const auto s = smith_normal_form(m);
      const std::string tag = "SNF instance " + std::to_string(t);
      o.require(s.U * m * s.V == s.D, tag + ": UMV != D");
      o.require(abs(oracle::bareiss_det(s.U)) == 1 && abs(oracle::bareiss_det(s.V)) == 1, tag + ": not unimodular");
      const std::size_t k = std::min(m.rows(), m.cols());
      for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
          if (i != j) o.require(s.D(i, j) == 0, tag + ": D not diagonal");
      for (std::size_t i = 0; i + 1 < k; ++i) {
        const Integer& a = s.D(i, i);
        const Integer& b = s.D(i + 1, i + 1);
        o.require(a >= 0 && b >= 0, tag + ": negative invariant factor");
        o.require(a == 0 ? b == 0 : b % a == 0, tag + ": divisibility chain");
      }
    }
    std::size_t n = 0;
    for (const auto& c : oracle::exactness_corpus()) {
      const auto want = oracle::element_exactness(c.in, c.out);
      const auto got = exactness(c.in, c.out);
      o.require(got.exact == want.exact && got.composite_zero == want.composite_zero,
                "exactness case " + std::to_string(n));
      ++n;
    }
    return o;
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
