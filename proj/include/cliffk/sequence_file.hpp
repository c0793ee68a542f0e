#pragma once

// Line-oriented text format for exact sequences:
//
//   term NAME = GROUPEXPR | unknown{G1, G2, ...}
//   map NAME : SRC -> DST = [[row], ...] | unknown | 0
//   check exact at NAME[, NAME...]
//   solve bound = INT
//
// '#' starts a comment. Each matrix row lists the image of one source
// generator in target coordinates.

#include <optional>
#include <string>
#include <string_view>

#include "cliffk/sequence.hpp"

namespace cliffk {

struct SequenceFile {
  Sequence sequence;
  std::optional<int> bound;

  friend bool operator==(const SequenceFile&, const SequenceFile&) = default;
};

/// Throws ParseError carrying the offending line.
SequenceFile parse_sequence_file(std::string_view text);

/// Canonical form; parse_sequence_file(to_string(f)) == f.
std::string to_string(const SequenceFile& f);

/// "[[2],[0]]" with one inner list per source generator; "0" when either
/// side has no generators.
std::string matrix_to_string(const IntMatrix& m);

}  // namespace cliffk
