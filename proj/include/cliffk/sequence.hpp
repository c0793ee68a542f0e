#pragma once

// Finite exact sequences T0 -> T1 -> ... -> Tn whose groups or maps may be
// placeholders, with exactness checks and a bounded exhaustive solver.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffk/abgroup.hpp"

namespace cliffk {

struct SequenceTerm {
  std::string name;
  std::optional<FGAbelianGroup> group;
  /// Candidate groups when `group` is unbound.
  std::vector<FGAbelianGroup> candidates;

  static SequenceTerm known(std::string name, FGAbelianGroup g) { return {std::move(name), std::move(g), {}}; }
  static SequenceTerm unknown(std::string name, std::vector<FGAbelianGroup> candidates) {
    return {std::move(name), std::nullopt, std::move(candidates)};
  }
  bool is_known() const { return group.has_value(); }

  friend bool operator==(const SequenceTerm&, const SequenceTerm&) = default;
};

/// maps[i] goes from terms[i] to terms[i + 1].
struct SequenceMap {
  std::string name;
  std::optional<IntMatrix> matrix;

  static SequenceMap known(std::string name, IntMatrix m) { return {std::move(name), std::move(m)}; }
  static SequenceMap unknown(std::string name) { return {std::move(name), std::nullopt}; }
  bool is_known() const { return matrix.has_value(); }

  friend bool operator==(const SequenceMap&, const SequenceMap&) = default;
};

struct Sequence {
  std::vector<SequenceTerm> terms;
  std::vector<SequenceMap> maps;
  /// Positions (term indices) where exactness is required.
  std::vector<std::size_t> checks;

  /// Throws SequenceError unless maps.size() + 1 == terms.size() (or both
  /// are empty) and every check position is in range.
  void validate_shape() const;
  bool is_fully_bound() const;
  std::optional<std::size_t> term_index(const std::string& name) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// A complete binding of every term and map.
struct Assignment {
  std::vector<FGAbelianGroup> groups;
  std::vector<GroupHom> maps;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Binds a fully specified sequence; throws SequenceError on placeholders and
/// HomomorphismError on ill-defined maps.
Assignment bind(const Sequence& seq);

/// Exactness at term `position`; a missing neighbour map is the zero map
/// from or to the trivial group.
ExactnessReport exactness_at(const Assignment& a, std::size_t position);
bool check_exact(const Sequence& seq, std::size_t position);

inline constexpr std::uint64_t kDefaultSearchCeiling = 1'000'000;

/// Number of candidate (group, matrix) combinations solve_exact would visit
/// before filtering, saturating at UINT64_MAX.
std::uint64_t search_space_size(const Sequence& seq, int bound);

/// Every assignment that is exact at all checked positions. Unknown maps
/// range over matrices with free target coordinates in [-bound, bound] and
/// torsion coordinates in [0, d). Results come in lexicographic order of
/// (candidate index per term, matrix entries column by column). Throws
/// SearchSpaceError when search_space_size exceeds `ceiling`.
std::vector<Assignment> solve_exact(const Sequence& seq, int bound,
                                    std::uint64_t ceiling = kDefaultSearchCeiling);

}  // namespace cliffk
