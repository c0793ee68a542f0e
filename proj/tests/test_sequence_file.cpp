#include "doctest.h"

#include "cliffk/error.hpp"
#include "cliffk/ktheory.hpp"
#include "cliffk/sequence_file.hpp"

using namespace cliffk;

namespace {

const char* kBott = R"(# Bott degree 0
term KU0 = Z
term KO0 = Z
term KOm1 = Z/2
term KU1 = 0
map r : KU0 -> KO0 = [[2]]
map eta : KO0 -> KOm1 = [[1]]
map c : KOm1 -> KU1 = [[0]]
check exact at KO0, KOm1
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_sequence_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse the Bott file") {
  const auto f = parse_sequence_file(kBott);
  const auto& s = f.sequence;
  REQUIRE(s.terms.size() == 4);
  REQUIRE(s.maps.size() == 3);
  CHECK(s.terms[2].group == FGAbelianGroup::parse("Z/2"));
  CHECK(s.maps[0].matrix->rows() == 1);
  CHECK((*s.maps[0].matrix)(0, 0) == 2);
  CHECK(s.maps[2].matrix->rows() == 0);
  CHECK(s.checks == std::vector<std::size_t>{1, 2});
  CHECK(!f.bound);
  CHECK(s.is_fully_bound());
  CHECK(check_exact(s, 1));
  CHECK(check_exact(s, 2));
}

TEST_CASE("rows are images of source generators") {
  const auto f = parse_sequence_file(
      "term A = Z^2\nterm B = Z^3\nmap f : A -> B = [[1,2,3],[4,5,6]]\n");
  const auto& m = *f.sequence.maps[0].matrix;
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m(0, 1) == 4);
  CHECK(m(2, 0) == 3);
}

TEST_CASE("round trip") {
  const auto f = parse_sequence_file(kBott);
  const std::string canonical = to_string(f);
  CHECK(parse_sequence_file(canonical) == f);
  CHECK(to_string(parse_sequence_file(canonical)) == canonical);

  const char* tmpl =
      "term A = 0\nterm B = Z + Z/2\nterm C = unknown{0, Z, Z/2 + Z/4}\nmap f : A -> B = 0\n"
      "map g : B -> C = unknown\ncheck exact at B\nsolve bound = 3\n";
  const auto t = parse_sequence_file(tmpl);
  CHECK(t.bound == 3);
  CHECK(parse_sequence_file(to_string(t)) == t);

  for (int i = 0; i < 8; ++i) {
    const SequenceFile b{bott_sequence_instance(i), 2};
    CHECK(parse_sequence_file(to_string(b)) == b);
  }
}

TEST_CASE("CRLF and comments") {
  std::string crlf;
  for (char c : std::string(kBott)) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  CHECK(parse_sequence_file(crlf) == parse_sequence_file(kBott));
  CHECK(parse_sequence_file("  # nothing\n\nterm A = Z   # trailing\n").sequence.terms.size() == 1);
}

TEST_CASE("zero maps and trivial groups") {
  const auto f = parse_sequence_file("term A = 0\nterm B = 0\nmap f : A -> B = 0\ncheck exact at A, B\n");
  CHECK(check_exact(f.sequence, 0));
  CHECK(check_exact(f.sequence, 1));
  const auto g = parse_sequence_file("term A = Z\nterm B = Z\nmap f : A -> B = 0\n");
  CHECK(g.sequence.maps[0].matrix->is_zero_matrix());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("term A = Z\nfrobnicate\n") == 2);
  CHECK(error_line("term A = Q\n") == 1);
  CHECK(error_line("term A = Z\nterm A = Z\n") == 2);
  CHECK(error_line("term A = Z\nterm B = Z\nterm C = Z\nmap f : A -> C = [[1]]\n") == 4);
  CHECK(error_line("term A = Z\nterm B = Z\nmap f : A -> B = [[1,2]]\n") == 3);
  CHECK(error_line("term A = Z\nterm B = Z\nmap f : A -> B = [[1]\n") == 3);
  CHECK(error_line("term A = Z\nterm B = Z\n") == 2);
  CHECK(error_line("term A = Z\ncheck exact at Q\n") == 2);
  CHECK(error_line("solve bound = 0\n") == 1);
  CHECK(error_line("term A = unknown{}\n") == 1);
  CHECK(error_line("term A = unknown{Z}\nterm B = Z\nmap f : A -> B = [[1]]\n") == 3);
  CHECK(error_line("term A = 0\nterm B = Z\nmap f : A -> B = [[5]]\n") == 3);
  CHECK(error_line("term A = Z\nterm B = Z\nmap f : A -> B = [[1]]\nmap g : A -> B = [[1]]\n") == 4);
}
