#include "cliffk/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cliffk {

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : d_(m),
        u_(IntMatrix::identity(m.rows())),
        ui_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())) {}

  SmithDecomposition run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
    }
    return {std::move(u_), std::move(d_), std::move(v_), std::move(ui_)};
  }

 private:
  // Returns false when the remaining submatrix is zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      if (!move_min_to(t)) return false;
      const Integer pivot = d_(t, t);
      bool dirty = false;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (is_zero(d_(i, t))) continue;
        const Integer q = d_(i, t) / pivot;
        add_row(i, t, Integer(-q));
        dirty = dirty || !is_zero(d_(i, t));
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (is_zero(d_(t, j))) continue;
        const Integer q = d_(t, j) / pivot;
        add_col(j, t, Integer(-q));
        dirty = dirty || !is_zero(d_(t, j));
      }
      if (dirty) continue;
      // Row and column t are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (!is_zero(d_(i, j)) && !mpz_divisible_p(d_(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (!divisible) continue;
      if (sgn(d_(t, t)) < 0) negate_row(t);
      return true;
    }
  }

  bool move_min_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (is_zero(d_(i, j))) continue;
        if (!found || mpz_cmpabs(d_(i, j).get_mpz_t(), d_(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
    for (std::size_t r = 0; r < ui_.rows(); ++r) std::swap(ui_(r, a), ui_(r, b));
  }

  // row dst += k * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(dst, c) += k * d_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += k * u_(src, c);
    for (std::size_t r = 0; r < ui_.rows(); ++r) ui_(r, src) -= k * ui_(r, dst);
  }

  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(a, c) = -d_(a, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(a, c) = -u_(a, c);
    for (std::size_t r = 0; r < ui_.rows(); ++r) ui_(r, a) = -ui_(r, a);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
  }

  // col dst += k * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, dst) += k * d_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += k * v_(r, src);
  }

  IntMatrix d_, u_, ui_, v_;
};

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::logic_error("hcat row mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

std::size_t nonzero_diagonal(const IntMatrix& d) {
  std::size_t r = 0;
  while (r < std::min(d.rows(), d.cols()) && !is_zero(d(r, r))) ++r;
  return r;
}

// Basis of the column lattice of a.
IntMatrix column_basis(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  const std::size_t r = nonzero_diagonal(s.D);
  IntMatrix out(a.rows(), r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, c) = s.D(c, c) * s.U_inverse(i, c);
  return out;
}

// Basis of the integer kernel {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  const std::size_t r = nonzero_diagonal(s.D);
  IntMatrix out(a.cols(), a.cols() - r);
  for (std::size_t c = r; c < a.cols(); ++c)
    for (std::size_t i = 0; i < a.cols(); ++i) out(i, c - r) = s.V(i, c);
  return out;
}

// Integer solution x of basis * x = rhs, column by column; basis has full
// column rank and rhs lies in its column lattice.
IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& rhs) {
  const auto s = smith_normal_form(basis);
  const std::size_t r = nonzero_diagonal(s.D);
  if (r != basis.cols()) throw std::logic_error("lattice basis is not of full column rank");
  const IntMatrix ub = s.U * rhs;
  IntMatrix y(basis.cols(), rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t i = 0; i < ub.rows(); ++i) {
      if (i >= r) {
        if (!is_zero(ub(i, c))) throw std::logic_error("vector outside lattice");
        continue;
      }
      if (!mpz_divisible_p(ub(i, c).get_mpz_t(), s.D(i, i).get_mpz_t()))
        throw std::logic_error("vector outside lattice");
      y(i, c) = ub(i, c) / s.D(i, i);
    }
  }
  return s.V * y;
}

// span(basis) / span(sub), where span(sub) lies inside span(basis).
FGAbelianGroup lattice_quotient(const IntMatrix& basis, const IntMatrix& sub) {
  const IntMatrix coords = solve_in_lattice(basis, sub);
  const auto s = smith_normal_form(coords);
  const auto factors = s.invariant_factors();
  return FGAbelianGroup::from_orders(basis.cols() - factors.size(), factors);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Integer parse_integer(const std::string& digits, std::string_view context) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad integer in group expression '" + std::string(context) + "'");
  return Integer(digits);
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (!is_zero(D(i, i))) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

FGAbelianGroup::FGAbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& d) {
  if (sgn(d) == 0) return free(1);
  return from_orders(0, {d});
}

FGAbelianGroup FGAbelianGroup::from_orders(std::size_t free, const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = abs(orders[i]);
  const auto s = smith_normal_form(diag);
  std::size_t rank = free;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const Integer& d = s.D(i, i);
    if (is_zero(d)) {
      ++rank;
    } else if (d != 1) {
      torsion.push_back(d);
    }
  }
  return {rank, std::move(torsion)};
}

FGAbelianGroup FGAbelianGroup::parse(std::string_view text) {
  std::size_t free = 0;
  std::vector<Integer> orders;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = text.find('+', start);
    const std::string part = trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
    if (part.empty()) throw std::invalid_argument("empty summand in group expression '" + std::string(text) + "'");
    if (part == "0") {
      // trivial summand
    } else if (part == "Z") {
      ++free;
    } else if (part.rfind("Z^", 0) == 0) {
      free += parse_integer(trim(part.substr(2)), text).get_ui();
    } else if (part.rfind("Z/", 0) == 0) {
      orders.push_back(parse_integer(trim(part.substr(2)), text));
    } else {
      throw std::invalid_argument("unrecognized summand '" + part + "'");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return from_orders(free, orders);
}

Integer FGAbelianGroup::generator_order(std::size_t i) const {
  if (i >= generator_count()) throw std::out_of_range("generator index");
  return i < rank_ ? Integer(0) : torsion_[i - rank_];
}

std::optional<Integer> FGAbelianGroup::order() const {
  if (rank_ != 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

IntMatrix FGAbelianGroup::relations() const {
  IntMatrix r(generator_count(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) r(rank_ + i, i) = torsion_[i];
  return r;
}

std::string FGAbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (const auto& d : torsion_) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

bool is_well_defined(const FGAbelianGroup& source, const FGAbelianGroup& target, const IntMatrix& m) {
  if (m.rows() != target.generator_count() || m.cols() != source.generator_count()) return false;
  for (std::size_t j = source.rank(); j < source.generator_count(); ++j) {
    const Integer d = source.generator_order(j);
    for (std::size_t i = 0; i < target.generator_count(); ++i) {
      const Integer e = target.generator_order(i);
      const Integer x = d * m(i, j);
      if (is_zero(e) ? !is_zero(x) : !mpz_divisible_p(x.get_mpz_t(), e.get_mpz_t())) return false;
    }
  }
  return true;
}

GroupHom::GroupHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
    throw HomomorphismError("matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected " +
                            std::to_string(target_.generator_count()) + "x" +
                            std::to_string(source_.generator_count()));
  if (!is_well_defined(source_, target_, matrix_))
    throw HomomorphismError("image of a torsion generator has incompatible order");
  for (std::size_t i = target_.rank(); i < target_.generator_count(); ++i) {
    const Integer e = target_.generator_order(i);
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), matrix_(i, j).get_mpz_t(), e.get_mpz_t());
      matrix_(i, j) = r;
    }
  }
}

GroupHom GroupHom::zero(const FGAbelianGroup& source, const FGAbelianGroup& target) {
  return {source, target, IntMatrix(target.generator_count(), source.generator_count())};
}

GroupHom GroupHom::identity(const FGAbelianGroup& g) {
  return {g, g, IntMatrix::identity(g.generator_count())};
}

GroupHom GroupHom::scalar(const FGAbelianGroup& source, const FGAbelianGroup& target, const Integer& k) {
  if (source.generator_count() != 1 || target.generator_count() != 1)
    throw HomomorphismError("scalar maps need single-generator groups");
  IntMatrix m(1, 1);
  m(0, 0) = k;
  return {source, target, std::move(m)};
}

GroupHom GroupHom::after(const GroupHom& first) const {
  if (first.target_ != source_) throw HomomorphismError("composition of non-matching maps");
  return {first.source_, target_, matrix_ * first.matrix_};
}

FGAbelianGroup cokernel(const GroupHom& f) {
  const auto& t = f.target();
  return lattice_quotient(IntMatrix::identity(t.generator_count()), hcat(f.matrix(), t.relations()));
}

namespace {

// Lattice of source coordinates x with f(x) = 0 in the target.
IntMatrix kernel_lattice(const GroupHom& f) {
  const IntMatrix k = kernel_basis(hcat(f.matrix(), f.target().relations()));
  const std::size_t n = f.source().generator_count();
  IntMatrix x(n, k.cols());
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (std::size_t i = 0; i < n; ++i) x(i, c) = k(i, c);
  return x;
}

}  // namespace

FGAbelianGroup kernel(const GroupHom& f) {
  return lattice_quotient(kernel_lattice(f), f.source().relations());
}

FGAbelianGroup image(const GroupHom& f) {
  const auto& t = f.target();
  return lattice_quotient(column_basis(hcat(f.matrix(), t.relations())), t.relations());
}

ExactnessReport exactness(const GroupHom& in, const GroupHom& out) {
  if (in.target() != out.source())
    throw SequenceError("maps do not compose: " + in.target().to_string() + " vs " + out.source().to_string());
  ExactnessReport r;
  r.composite_zero = out.after(in).is_zero();
  r.image_index = cokernel(in).order();
  r.kernel_index = image(out).order();
  if (r.composite_zero) {
    r.homology = lattice_quotient(kernel_lattice(out), hcat(in.matrix(), in.target().relations()));
    r.exact = r.homology.is_trivial();
  }
  return r;
}

}  // namespace cliffk
