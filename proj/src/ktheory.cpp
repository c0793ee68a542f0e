#include "cliffk/ktheory.hpp"

#include <array>
#include <stdexcept>

namespace cliffk {

std::string to_string(Theory t) { return t == Theory::KO ? "KO" : "KU"; }

ScalarField field_of(Theory t) { return t == Theory::KO ? ScalarField::Real : ScalarField::Complex; }

void ForgetfulFunctor::validate() const {
  if (small.p > big.p || small.q > big.q)
    throw EmbeddingError("C^{" + std::to_string(small.p) + "," + std::to_string(small.q) +
                         "} is not an initial segment of C^{" + std::to_string(big.p) + "," +
                         std::to_string(big.q) + "}");
}

FGAbelianGroup k0(Signature sig, ScalarField field) {
  return FGAbelianGroup::free(classify(sig, field).factors);
}

namespace {

IntMatrix to_int_matrix(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer(static_cast<unsigned long>(rows[i][j]));
  return m;
}

IntMatrix column(const std::vector<std::uint64_t>& entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = Integer(static_cast<unsigned long>(entries[i]));
  return m;
}

GroupHom hom_from_restriction(const RestrictionMatrix& r) {
  return {k0(r.big, r.field), k0(r.small, r.field), to_int_matrix(r.entries, r.big_dims.size())};
}

}  // namespace

GroupHom forgetful_k_map(const ForgetfulFunctor& f) {
  f.validate();
  return hom_from_restriction(restriction_multiplicities(f.big, f.small, f.field));
}

RelativeK relative_k(const ForgetfulFunctor& f) {
  f.validate();
  auto r = restriction_multiplicities(f.big, f.small, f.field);
  GroupHom map = hom_from_restriction(r);
  return {cokernel(map), kernel(map), std::move(map), std::move(r)};
}

FGAbelianGroup reduced_k_rpn(unsigned n, Theory theory) {
  if (n == 0) throw std::invalid_argument("RP^n needs n >= 1");
  return cokernel(forgetful_k_map({Signature{n, 0}, Signature{0, 0}, field_of(theory)}));
}

unsigned adams_f(unsigned n) {
  unsigned count = 0;
  for (unsigned s = 1; s <= n; ++s) {
    const unsigned r = s % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
  }
  return count;
}

FGAbelianGroup point_k(unsigned i, Theory theory) {
  if (i == 0) return FGAbelianGroup::free(1);
  return cokernel(forgetful_k_map({Signature{i, 0}, Signature{i - 1, 0}, field_of(theory)}));
}

ThomReport thom_report(unsigned n, unsigned r_max) {
  ThomReport report;
  report.n = n;
  const auto base = relative_k({Signature{0, n + 1}, Signature{0, n}, ScalarField::Real});
  report.ok = true;
  for (unsigned r = 0; r <= r_max; ++r) {
    const auto here = relative_k({Signature{0, n + r + 1}, Signature{0, n + r}, ScalarField::Real});
    const auto up = relative_k({Signature{0, n + r + 9}, Signature{0, n + r + 8}, ScalarField::Real});
    const auto shifted = relative_k({Signature{r, n + r + 1}, Signature{r, n + r}, ScalarField::Real});
    ThomComparison c;
    c.r = r;
    c.periodic = here.same_groups(up);
    c.degree_shift = shifted.same_groups(base);
    c.coker = here.coker;
    c.ker = here.ker;
    report.ok = report.ok && c.periodic && c.degree_shift;
    report.comparisons.push_back(std::move(c));
  }
  return report;
}

bool thom_stability(unsigned n, unsigned r_max) { return thom_report(n, r_max).ok; }

namespace {

Sequence bott_shape(int i, const std::array<std::string, 4>& names) {
  const unsigned d = static_cast<unsigned>(((i % 8) + 8) % 8);
  // KU^{-d+1}: degree -1 is represented by its period-2 partner.
  const unsigned ku_next = d == 0 ? 1 : d - 1;
  Sequence s;
  s.terms = {
      SequenceTerm::known(names[0], point_k(d, Theory::KU)),
      SequenceTerm::known(names[1], point_k(d, Theory::KO)),
      SequenceTerm::known(names[2], point_k(d + 1, Theory::KO)),
      SequenceTerm::known(names[3], point_k(ku_next, Theory::KU)),
  };
  s.maps = {SequenceMap::unknown("r"), SequenceMap::unknown("eta"), SequenceMap::unknown("c")};
  s.checks = {1, 2};
  return s;
}

std::string degree(int k) { return std::to_string(k); }

}  // namespace

Sequence bott_sequence_instance(int i) {
  const int d = ((i % 8) + 8) % 8;
  return bott_shape(i, {"KU^" + degree(-d), "KO^" + degree(-d), "KO^" + degree(-d - 1), "KU^" + degree(1 - d)});
}

Sequence equivariant_sequence_point_instance(int deg) {
  const int d = ((deg % 8) + 8) % 8;
  return bott_shape(deg, {"KR^" + degree(-d) + "(X)", "KO_G^" + degree(-d) + "(X)",
                          "KO_G^" + degree(-d) + "(X x R)", "KR^" + degree(1 - d) + "(X)"});
}

bool FiberReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

FiberReport fiber_twist_check() {
  FiberReport report;
  const auto real = ScalarField::Real;
  const Signature line{1, 0}, point{0, 0}, line_plus_two{0, 3}, line_plus_one{0, 2};

  {
    const auto d = classify(line, real);
    const bool is_c = d.factors == 1 && d.matrix_size == 1 && d.ring == DivisionRing::C;
    const auto g = k0(line, real);
    report.checks.push_back({"(a) C^{1,0} = C, K_0 = KU(point)",
                             is_c && g == FGAbelianGroup::free(1) && g == point_k(0, Theory::KU),
                             "C^{1,0} ≅ " + d.to_string() + ", K_0 = " + g.to_string()});
  }
  {
    const auto a = classify(line_plus_two, real), b = classify(line, real);
    report.checks.push_back({"(b) C^{0,3} Morita-equivalent to C^{1,0}",
                             a.morita_equivalent(b) && a.matrix_size == 2 * b.matrix_size,
                             a.to_string() + " vs " + b.to_string()});
  }
  {
    const auto a = classify(line_plus_one, real), b = classify(point, real);
    report.checks.push_back({"(c) C^{0,2} Morita-equivalent to C^{0,0}",
                             a.morita_equivalent(b) && a.matrix_size == 2 * b.matrix_size,
                             a.to_string() + " vs " + b.to_string()});
  }
  {
    const IntMatrix top = forgetful_k_map({line, point, real}).matrix();
    const IntMatrix bottom = forgetful_k_map({line_plus_two, line_plus_one, real}).matrix();
    const IntMatrix left = column(decompose(matrix_shift_module(irreducible_reps(line, real).front())));
    const IntMatrix right = column(decompose(matrix_shift_module(irreducible_reps(point, real).front())));
    report.top_then_right = right * top;
    report.left_then_bottom = bottom * left;
    std::string detail = "composites";
    for (const auto* m : {&report.top_then_right, &report.left_then_bottom}) {
      detail += " [";
      for (std::size_t i = 0; i < m->rows(); ++i) detail += (i ? "," : "") + (*m)(i, 0).get_str();
      detail += "] ";
    }
    report.checks.push_back({"(d) K_0 square commutes", report.top_then_right == report.left_then_bottom,
                             detail});
  }
  return report;
}

}  // namespace cliffk
