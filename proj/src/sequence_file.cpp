#include "cliffk/sequence_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace cliffk {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_name(const std::string& s) {
  if (s.empty() || s == "->") return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '^' || c == '-' || c == '\'' || c == '.';
  });
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == s.npos ? s.npos : pos - start)));
    if (pos == s.npos) return out;
    start = pos + 1;
  }
}

// Splits "lhs = rhs" at the first '='.
std::pair<std::string, std::string> split_assign(std::size_t line, const std::string& body) {
  const auto eq = body.find('=');
  if (eq == std::string::npos) throw ParseError(line, "expected '='");
  return {trim(std::string_view(body).substr(0, eq)), trim(std::string_view(body).substr(eq + 1))};
}

FGAbelianGroup parse_group(std::size_t line, const std::string& text) {
  try {
    return FGAbelianGroup::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

Integer parse_int(std::size_t line, const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, "bad integer '" + text + "'");
  Integer v(digits);
  return text[0] == '-' ? Integer(-v) : v;
}

// Rows as written: rows[j] is the image of source generator j.
std::vector<std::vector<Integer>> parse_rows(std::size_t line, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError(line, "matrix must be [[...],...]");
  const std::string inner = s.substr(1, s.size() - 2);
  std::vector<std::vector<Integer>> rows;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] != '[') throw ParseError(line, "expected '[' in matrix");
    const auto close = inner.find(']', pos);
    if (close == std::string::npos) throw ParseError(line, "unterminated matrix row");
    const std::string body = inner.substr(pos + 1, close - pos - 1);
    std::vector<Integer> row;
    if (!body.empty())
      for (const auto& tok : split(body, ',')) row.push_back(parse_int(line, tok));
    rows.push_back(std::move(row));
    pos = close + 1;
    if (pos < inner.size()) {
      if (inner[pos] != ',') throw ParseError(line, "expected ',' between matrix rows");
      ++pos;
      if (pos == inner.size()) throw ParseError(line, "trailing ',' in matrix");
    }
  }
  return rows;
}

struct PendingMap {
  std::size_t line;
  std::string name, src, dst, value;
};

IntMatrix build_matrix(const PendingMap& pm, const FGAbelianGroup& src, const FGAbelianGroup& dst) {
  const std::size_t cols = src.generator_count(), rows = dst.generator_count();
  IntMatrix m(rows, cols);
  if (pm.value == "0") return m;
  const auto written = parse_rows(pm.line, pm.value);
  if (rows == 0 || cols == 0) {
    for (const auto& r : written)
      for (const auto& v : r)
        if (!is_zero(v)) throw ParseError(pm.line, "map into or out of a trivial group must be zero");
    return m;
  }
  if (written.size() != cols)
    throw ParseError(pm.line, "map " + pm.name + " needs " + std::to_string(cols) + " rows (one per generator of " +
                                  pm.src + "), got " + std::to_string(written.size()));
  for (std::size_t j = 0; j < cols; ++j) {
    if (written[j].size() != rows)
      throw ParseError(pm.line, "row " + std::to_string(j + 1) + " of map " + pm.name + " needs " +
                                    std::to_string(rows) + " entries");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = written[j][i];
  }
  return m;
}

}  // namespace

SequenceFile parse_sequence_file(std::string_view text) {
  SequenceFile out;
  auto& seq = out.sequence;
  std::map<std::string, std::size_t> term_line;
  std::vector<PendingMap> maps;
  std::vector<std::pair<std::size_t, std::string>> checks;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string stmt = trim(raw);
    if (stmt.empty()) continue;
    const auto space = stmt.find_first_of(" \t");
    const std::string keyword = stmt.substr(0, space);
    const std::string body = space == std::string::npos ? "" : trim(std::string_view(stmt).substr(space));

    if (keyword == "term") {
      auto [name, value] = split_assign(line, body);
      if (!valid_name(name)) throw ParseError(line, "bad term name '" + name + "'");
      if (term_line.count(name)) throw ParseError(line, "duplicate term '" + name + "'");
      term_line[name] = line;
      if (value.rfind("unknown", 0) == 0) {
        const std::string rest = trim(std::string_view(value).substr(7));
        if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
          throw ParseError(line, "expected unknown{G1, G2, ...}");
        const std::string inner = trim(std::string_view(rest).substr(1, rest.size() - 2));
        if (inner.empty()) throw ParseError(line, "unknown term needs at least one candidate");
        std::vector<FGAbelianGroup> candidates;
        for (const auto& g : split(inner, ',')) candidates.push_back(parse_group(line, g));
        seq.terms.push_back(SequenceTerm::unknown(name, std::move(candidates)));
      } else {
        seq.terms.push_back(SequenceTerm::known(name, parse_group(line, value)));
      }
    } else if (keyword == "map") {
      auto [lhs, value] = split_assign(line, body);
      const auto colon = lhs.find(':');
      if (colon == std::string::npos) throw ParseError(line, "expected 'map NAME : SRC -> DST'");
      const std::string name = trim(std::string_view(lhs).substr(0, colon));
      const std::string ends = trim(std::string_view(lhs).substr(colon + 1));
      const auto arrow = ends.find("->");
      if (arrow == std::string::npos) throw ParseError(line, "expected '->'");
      PendingMap pm{line, name, trim(std::string_view(ends).substr(0, arrow)),
                    trim(std::string_view(ends).substr(arrow + 2)), value};
      if (!valid_name(pm.name)) throw ParseError(line, "bad map name '" + pm.name + "'");
      if (pm.value.empty()) throw ParseError(line, "missing map value");
      maps.push_back(std::move(pm));
    } else if (keyword == "check") {
      if (body.rfind("exact", 0) != 0) throw ParseError(line, "expected 'check exact at ...'");
      const std::string rest = trim(std::string_view(body).substr(5));
      if (rest.rfind("at", 0) != 0 || (rest.size() > 2 && !std::isspace(static_cast<unsigned char>(rest[2]))))
        throw ParseError(line, "expected 'check exact at ...'");
      const std::string names = trim(std::string_view(rest).substr(2));
      if (names.empty()) throw ParseError(line, "check needs at least one term");
      for (const auto& n : split(names, ',')) checks.emplace_back(line, n);
    } else if (keyword == "solve") {
      auto [lhs, value] = split_assign(line, body);
      if (lhs != "bound") throw ParseError(line, "expected 'solve bound = INT'");
      if (out.bound) throw ParseError(line, "duplicate solve bound");
      const Integer b = parse_int(line, value);
      if (b < 1 || b > 1000) throw ParseError(line, "solve bound must be between 1 and 1000");
      out.bound = static_cast<int>(b.get_si());
    } else {
      throw ParseError(line, "unknown directive '" + keyword + "'");
    }
  }

  const auto index_of = [&](std::size_t at, const std::string& name) {
    const auto idx = seq.term_index(name);
    if (!idx) throw ParseError(at, "unknown term '" + name + "'");
    return *idx;
  };

  std::vector<std::optional<SequenceMap>> slots(seq.terms.empty() ? 0 : seq.terms.size() - 1);
  for (const auto& pm : maps) {
    const std::size_t s = index_of(pm.line, pm.src), d = index_of(pm.line, pm.dst);
    if (d != s + 1) throw ParseError(pm.line, "map " + pm.name + " must go between consecutive terms");
    if (slots[s]) throw ParseError(pm.line, "second map out of " + pm.src);
    if (pm.value == "unknown") {
      slots[s] = SequenceMap::unknown(pm.name);
      continue;
    }
    if (!seq.terms[s].is_known() || !seq.terms[d].is_known())
      throw ParseError(pm.line, "map " + pm.name + " has an unknown endpoint; declare it 'unknown'");
    slots[s] = SequenceMap::known(pm.name, build_matrix(pm, *seq.terms[s].group, *seq.terms[d].group));
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i])
      throw ParseError(term_line[seq.terms[i + 1].name],
                       "no map from " + seq.terms[i].name + " to " + seq.terms[i + 1].name);
    seq.maps.push_back(std::move(*slots[i]));
  }

  for (const auto& [at, name] : checks) seq.checks.push_back(index_of(at, name));
  std::sort(seq.checks.begin(), seq.checks.end());
  seq.checks.erase(std::unique(seq.checks.begin(), seq.checks.end()), seq.checks.end());
  return out;
}

std::string matrix_to_string(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "0";
  std::string s = "[";
  for (std::size_t j = 0; j < m.cols(); ++j) {
    s += j ? ",[" : "[";
    for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "," : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

std::string to_string(const SequenceFile& f) {
  const auto& seq = f.sequence;
  std::ostringstream os;
  for (const auto& t : seq.terms) {
    os << "term " << t.name << " = ";
    if (t.is_known()) {
      os << t.group->to_string();
    } else {
      os << "unknown{";
      for (std::size_t i = 0; i < t.candidates.size(); ++i) os << (i ? ", " : "") << t.candidates[i];
      os << "}";
    }
    os << "\n";
  }
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const auto& m = seq.maps[i];
    os << "map " << m.name << " : " << seq.terms[i].name << " -> " << seq.terms[i + 1].name << " = "
       << (m.is_known() ? matrix_to_string(*m.matrix) : "unknown") << "\n";
  }
  if (!seq.checks.empty()) {
    os << "check exact at ";
    for (std::size_t i = 0; i < seq.checks.size(); ++i) os << (i ? ", " : "") << seq.terms[seq.checks[i]].name;
    os << "\n";
  }
  if (f.bound) os << "solve bound = " << *f.bound << "\n";
  return os.str();
}

}  // namespace cliffk
