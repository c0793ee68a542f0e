#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliffk/ktheory.hpp"
#include "cliffk/rep.hpp"
#include "cliffk/sequence_file.hpp"
#include "cliffk/structure.hpp"

namespace cliffk {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

std::string index_string(const std::optional<Integer>& v) { return v ? v->get_str() : "infinite"; }

Json index_json(const std::optional<Integer>& v) { return v ? Json(v->get_str()) : Json(nullptr); }

std::string signature_name(Signature s) {
  return "C^{" + std::to_string(s.p) + "," + std::to_string(s.q) + "}";
}

int emit(std::ostream& out, Format fmt, const Json& j, const std::string& text, int code) {
  if (fmt == Format::Json)
    out << j.dump(2) << "\n";
  else
    out << text;
  return code;
}

int cmd_classify(std::ostream& out, Format fmt, unsigned p, unsigned q, const std::string& field_flag) {
  const ScalarField field = field_flag == "c" ? ScalarField::Complex : ScalarField::Real;
  const Signature sig{p, q};
  sig.validate();
  const auto d = classify(sig, field);
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["field"] = to_string(field);
  j["algebra"] = d.to_string();
  j["factors"] = d.factors;
  j["matrix_size"] = d.matrix_size;
  j["ring"] = to_string(d.ring);
  j["dimension"] = d.dimension();
  std::ostringstream t;
  t << signature_name(sig) << (field == ScalarField::Complex ? " ⊗ C" : "") << " ≅ " << d.to_string() << " (dim "
    << d.dimension() << ")\n";
  return emit(out, fmt, j, t.str(), kExitOk);
}

int cmd_rpn(std::ostream& out, Format fmt, unsigned n, const std::string& theory_flag) {
  const Theory theory = theory_flag == "ku" ? Theory::KU : Theory::KO;
  const auto g = reduced_k_rpn(n, theory);
  Json j;
  j["n"] = n;
  j["theory"] = to_string(theory);
  j["group"] = g.to_string();
  j["order"] = g.order() ? Json(g.order()->get_str()) : Json(nullptr);
  return emit(out, fmt, j, g.to_string() + "\n", kExitOk);
}

int cmd_bott(std::ostream& out, Format fmt, unsigned max, const std::string& theory_flag) {
  const Theory theory = theory_flag == "ku" ? Theory::KU : Theory::KO;
  Json rows = Json::array();
  std::ostringstream t;
  t << "i   " << to_string(theory) << "^{-i}(point)\n";
  for (unsigned i = 0; i <= max; ++i) {
    const auto g = point_k(i, theory);
    rows.push_back({{"i", i}, {"group", g.to_string()}});
    t << std::left << std::setw(4) << i << g << "\n";
  }
  Json j;
  j["theory"] = to_string(theory);
  j["rows"] = rows;
  return emit(out, fmt, j, t.str(), kExitOk);
}

struct SuiteLine {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<SuiteLine> run_suite(const std::string& suite) {
  std::vector<SuiteLine> lines;
  if (suite == "morita") {
    for (unsigned m = 0; m <= 5; ++m) {
      const auto r = matrix_shift_iso_report(m);
      lines.push_back({"C^{0," + std::to_string(m + 2) + "} ≅ C^{" + std::to_string(m) + ",0} ⊗ M_2(R)", r.ok,
                       "relations " + std::string(r.relations ? "hold" : "fail") + ", rank " +
                           std::to_string(r.rank) + "/" + std::to_string(r.expected_rank)});
    }
  } else if (suite == "untwist") {
    for (unsigned n = 0; n <= 4; ++n) {
      const auto r = untwist_report(n);
      lines.push_back({"untwist n=" + std::to_string(n), r.ok,
                       "corners " + std::to_string(r.corner_dims[0]) + " + " + std::to_string(r.corner_dims[1])});
    }
  } else if (suite == "thom") {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto r = thom_report(n, 3);
      std::string detail;
      for (const auto& c : r.comparisons)
        detail += (detail.empty() ? "" : "; ") + std::string("r=") + std::to_string(c.r) + " coker " +
                  c.coker.to_string() + (c.periodic && c.degree_shift ? "" : " MISMATCH");
      lines.push_back({"thom n=" + std::to_string(n), r.ok, detail});
    }
  } else if (suite == "fiber") {
    for (const auto& c : fiber_twist_check().checks) lines.push_back({c.name, c.passed, c.detail});
  } else {
    throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
  }
  return lines;
}

int cmd_verify(std::ostream& out, Format fmt, const std::string& suite) {
  const auto lines = run_suite(suite);
  const bool ok = std::all_of(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.pass; });
  Json checks = Json::array();
  std::ostringstream t;
  for (const auto& l : lines) {
    checks.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    t << (l.pass ? "[PASS] " : "[FAIL] ") << l.name << ": " << l.detail << "\n";
  }
  t << suite << ": " << (ok ? "all passed" : "FAILED") << "\n";
  Json j;
  j["suite"] = suite;
  j["pass"] = ok;
  j["checks"] = checks;
  return emit(out, fmt, j, t.str(), ok ? kExitOk : kExitFailure);
}

int cmd_seq_bound(std::ostream& out, Format fmt, const SequenceFile& file) {
  const auto& seq = file.sequence;
  const auto a = bind(seq);
  Json positions = Json::array();
  std::ostringstream t;
  bool all = true;
  for (std::size_t pos : seq.checks) {
    const auto r = exactness_at(a, pos);
    const std::string& name = seq.terms[pos].name;
    positions.push_back({{"term", name},
                         {"exact", r.exact},
                         {"composite_zero", r.composite_zero},
                         {"homology", r.homology.to_string()},
                         {"image_index", index_json(r.image_index)},
                         {"kernel_index", index_json(r.kernel_index)}});
    if (r.exact) continue;
    all = false;
    if (!r.composite_zero)
      t << "not a complex at " << name << ": composite map is nonzero\n";
    else
      t << "not exact at " << name << ": image index " << index_string(r.image_index) << ", kernel index "
        << index_string(r.kernel_index) << "\n";
  }
  if (all) t << "exact at all checked positions\n";
  Json j;
  j["mode"] = "check";
  j["exact"] = all;
  j["positions"] = positions;
  return emit(out, fmt, j, t.str(), all ? kExitOk : kExitFailure);
}

int cmd_seq_solve(std::ostream& out, Format fmt, const SequenceFile& file) {
  const auto& seq = file.sequence;
  const int bound = *file.bound;
  const auto solutions = solve_exact(seq, bound);
  Json sols = Json::array();
  std::ostringstream t;
  t << solutions.size() << " exact assignment" << (solutions.size() == 1 ? "" : "s") << " with bound " << bound
    << "\n";
  for (const auto& a : solutions) {
    Json js;
    Json groups = Json::object(), maps = Json::object();
    std::string line;
    for (std::size_t i = 0; i < seq.terms.size(); ++i) {
      if (seq.terms[i].is_known()) continue;
      groups[seq.terms[i].name] = a.groups[i].to_string();
      line += (line.empty() ? "" : ", ") + seq.terms[i].name + " = " + a.groups[i].to_string();
    }
    for (std::size_t i = 0; i < seq.maps.size(); ++i) {
      const std::string m = matrix_to_string(a.maps[i].matrix());
      maps[seq.maps[i].name] = m;
      line += (line.empty() ? "" : ", ") + seq.maps[i].name + " = " + m;
    }
    js["groups"] = groups;
    js["maps"] = maps;
    sols.push_back(js);
    t << "  " << line << "\n";
  }
  Json j;
  j["mode"] = "solve";
  j["bound"] = bound;
  j["count"] = solutions.size();
  j["solutions"] = sols;
  return emit(out, fmt, j, t.str(), solutions.empty() ? kExitFailure : kExitOk);
}

int cmd_seq(std::ostream& out, std::ostream& err, Format fmt, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  SequenceFile file;
  try {
    file = parse_sequence_file(buf.str());
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (file.sequence.is_fully_bound()) return cmd_seq_bound(out, fmt, file);
  if (!file.bound) {
    err << path << ": sequence has unknowns; add 'solve bound = N'\n";
    return kExitUsage;
  }
  return cmd_seq_solve(out, fmt, file);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford algebra and K-theory calculator", "cliffk"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  unsigned p = 0, q = 0, n = 0, max = 7;
  std::string field = "r", theory = "ko", suite, file;

  auto* classify_cmd = app.add_subcommand("classify", "Structure of C^{p,q}");
  classify_cmd->add_option("P", p, "Negative generators")->required();
  classify_cmd->add_option("Q", q, "Positive generators")->required();
  classify_cmd->add_option("--field", field, "Scalar field")->check(CLI::IsMember({"r", "c"}));

  auto* rpn_cmd = app.add_subcommand("rpn", "Reduced K-theory of RP^n");
  rpn_cmd->add_option("N", n, "Dimension")->required()->check(CLI::Range(1u, 30u));
  rpn_cmd->add_option("--theory", theory, "K-theory")->check(CLI::IsMember({"ko", "ku"}));

  auto* bott_cmd = app.add_subcommand("bott", "K-groups of a point");
  bott_cmd->add_option("--max", max, "Largest degree")->check(CLI::Range(0u, 15u));
  bott_cmd->add_option("--theory", theory, "K-theory")->check(CLI::IsMember({"ko", "ku"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "morita, untwist, thom or fiber")
      ->required()
      ->check(CLI::IsMember({"morita", "untwist", "thom", "fiber"}));

  auto* seq_cmd = app.add_subcommand("seq", "Check or solve a sequence file");
  seq_cmd->add_option("FILE", file, "Sequence file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'cliffk --help' for usage\n";
    return kExitUsage;
  }

  const Format fmt = format == "json" ? Format::Json : Format::Text;
  try {
    if (*classify_cmd) return cmd_classify(out, fmt, p, q, field);
    if (*rpn_cmd) return cmd_rpn(out, fmt, n, theory);
    if (*bott_cmd) return cmd_bott(out, fmt, max, theory);
    if (*verify_cmd) return cmd_verify(out, fmt, suite);
    if (*seq_cmd) return cmd_seq(out, err, fmt, file);
  } catch (const SearchSpaceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cliffk
