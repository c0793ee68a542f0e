#include "cliffk/sequence.hpp"

#include <limits>

namespace cliffk {

void Sequence::validate_shape() const {
  if (!(terms.empty() && maps.empty()) && maps.size() + 1 != terms.size())
    throw SequenceError(std::to_string(terms.size()) + " terms need " +
                        std::to_string(terms.empty() ? 0 : terms.size() - 1) + " maps, got " +
                        std::to_string(maps.size()));
  for (auto p : checks)
    if (p >= terms.size()) throw SequenceError("check position " + std::to_string(p) + " out of range");
}

bool Sequence::is_fully_bound() const {
  for (const auto& t : terms)
    if (!t.is_known()) return false;
  for (const auto& m : maps)
    if (!m.is_known()) return false;
  return true;
}

std::optional<std::size_t> Sequence::term_index(const std::string& name) const {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].name == name) return i;
  return std::nullopt;
}

Assignment bind(const Sequence& seq) {
  seq.validate_shape();
  Assignment a;
  for (const auto& t : seq.terms) {
    if (!t.is_known()) throw SequenceError("term " + t.name + " is an unbound placeholder");
    a.groups.push_back(*t.group);
  }
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const auto& m = seq.maps[i];
    if (!m.is_known()) throw SequenceError("map " + m.name + " is an unbound placeholder");
    a.maps.emplace_back(a.groups[i], a.groups[i + 1], *m.matrix);
  }
  return a;
}

ExactnessReport exactness_at(const Assignment& a, std::size_t position) {
  if (position >= a.groups.size()) throw SequenceError("position out of range");
  const auto& mid = a.groups[position];
  const GroupHom in = position > 0 ? a.maps[position - 1] : GroupHom::zero(FGAbelianGroup::trivial(), mid);
  const GroupHom out =
      position < a.maps.size() ? a.maps[position] : GroupHom::zero(mid, FGAbelianGroup::trivial());
  return exactness(in, out);
}

bool check_exact(const Sequence& seq, std::size_t position) {
  return exactness_at(bind(seq), position).exact;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t coordinate_range(const FGAbelianGroup& target, std::size_t row, int bound) {
  const Integer e = target.generator_order(row);
  if (is_zero(e)) return static_cast<std::uint64_t>(2 * bound + 1);
  return e.fits_ulong_p() ? e.get_ui() : std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t matrix_count(const FGAbelianGroup& s, const FGAbelianGroup& t, int bound) {
  std::uint64_t n = 1;
  for (std::size_t j = 0; j < s.generator_count(); ++j)
    for (std::size_t i = 0; i < t.generator_count(); ++i) n = saturating_mul(n, coordinate_range(t, i, bound));
  return n;
}

// Calls visit(groups) for every choice of candidate groups, in order.
template <class Visit>
void for_each_group_choice(const Sequence& seq, Visit&& visit) {
  std::vector<FGAbelianGroup> groups(seq.terms.size());
  std::vector<std::size_t> idx(seq.terms.size(), 0);
  for (const auto& t : seq.terms)
    if (!t.is_known() && t.candidates.empty()) return;
  for (;;) {
    for (std::size_t i = 0; i < seq.terms.size(); ++i)
      groups[i] = seq.terms[i].is_known() ? *seq.terms[i].group : seq.terms[i].candidates[idx[i]];
    visit(groups);
    // odometer, last unknown term fastest
    std::size_t k = seq.terms.size();
    for (;;) {
      if (k == 0) return;
      --k;
      if (seq.terms[k].is_known()) continue;
      if (++idx[k] < seq.terms[k].candidates.size()) break;
      idx[k] = 0;
    }
  }
}

class Solver {
 public:
  Solver(const Sequence& seq, int bound) : seq_(seq), bound_(bound) {
    const std::size_t n = seq.terms.size();
    checks_after_.resize(seq.maps.size());
    std::vector<bool> wanted(n, false);
    for (auto p : seq.checks) wanted[p] = true;
    for (std::size_t p = 0; p < n; ++p) {
      if (!wanted[p]) continue;
      if (seq.maps.empty()) {
        checks_upfront_.push_back(p);
      } else {
        checks_after_[std::min(p, seq.maps.size() - 1)].push_back(p);
      }
    }
  }

  void run(const std::vector<FGAbelianGroup>& groups, std::vector<Assignment>& out) {
    current_.groups = groups;
    current_.maps.clear();
    for (auto p : checks_upfront_)
      if (!exactness_at(current_, p).exact) return;
    descend(0, out);
  }

 private:
  void descend(std::size_t k, std::vector<Assignment>& out) {
    if (k == seq_.maps.size()) {
      out.push_back(current_);
      return;
    }
    const auto& src = current_.groups[k];
    const auto& dst = current_.groups[k + 1];
    auto try_matrix = [&](const IntMatrix& m) {
      if (!is_well_defined(src, dst, m)) return;
      current_.maps.emplace_back(src, dst, m);
      bool ok = true;
      for (auto p : checks_after_[k])
        if (!exactness_at(current_, p).exact) {
          ok = false;
          break;
        }
      if (ok) descend(k + 1, out);
      current_.maps.pop_back();
    };

    if (seq_.maps[k].is_known()) {
      try_matrix(*seq_.maps[k].matrix);
      return;
    }
    // Enumerate entries column by column; the last entry varies fastest.
    const std::size_t rows = dst.generator_count();
    const std::size_t cols = src.generator_count();
    std::vector<Integer> lo(rows), hi(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      const Integer e = dst.generator_order(i);
      lo[i] = is_zero(e) ? Integer(-bound_) : Integer(0);
      hi[i] = is_zero(e) ? Integer(bound_) : Integer(e - 1);
    }
    IntMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = lo[i];
    for (;;) {
      try_matrix(m);
      std::size_t pos = rows * cols;
      for (;;) {
        if (pos == 0) return;
        --pos;
        const std::size_t j = pos / rows, i = pos % rows;
        if (m(i, j) < hi[i]) {
          m(i, j) += 1;
          break;
        }
        m(i, j) = lo[i];
      }
    }
  }

  const Sequence& seq_;
  int bound_;
  std::vector<std::vector<std::size_t>> checks_after_;
  std::vector<std::size_t> checks_upfront_;
  Assignment current_;
};

}  // namespace

std::uint64_t search_space_size(const Sequence& seq, int bound) {
  seq.validate_shape();
  std::uint64_t total = 0;
  for_each_group_choice(seq, [&](const std::vector<FGAbelianGroup>& groups) {
    std::uint64_t n = 1;
    for (std::size_t k = 0; k < seq.maps.size(); ++k)
      if (!seq.maps[k].is_known()) n = saturating_mul(n, matrix_count(groups[k], groups[k + 1], bound));
    total = saturating_add(total, n);
  });
  return total;
}

std::vector<Assignment> solve_exact(const Sequence& seq, int bound, std::uint64_t ceiling) {
  if (bound < 1) throw SequenceError("solve bound must be a positive integer");
  const std::uint64_t size = search_space_size(seq, bound);
  if (size > ceiling)
    throw SearchSpaceError("search space of " + std::to_string(size) + " candidates exceeds ceiling " +
                           std::to_string(ceiling));
  std::vector<Assignment> out;
  Solver solver(seq, bound);
  for_each_group_choice(seq, [&](const std::vector<FGAbelianGroup>& groups) { solver.run(groups, out); });
  return out;
}

}  // namespace cliffk
