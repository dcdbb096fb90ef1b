#include "wal/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "wal/classify.hpp"
#include "wal/learner.hpp"
#include "wal/words.hpp"

namespace wal {

namespace {

enum class Format { Table, Csv, Json };

struct Options {
  std::string format = "table";
  std::uint64_t seed = 0;

  std::string automaton, target, system, fixture, out_path, transcript;
  std::string word, words, rows, cols, side = "left";
  bool word_given = false;
  std::string strategy = "hkrs", teacher = "ally", equiv = "bounded";
  std::size_t equiv_depth = 6, probe_depth = 6, budget = 500, depth = 8, cap = 10000;
  std::size_t max_q = 1, max_t = 2;
  std::string witness;
  bool table = false, enumerate = false;
};

Format format_of(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw DomainError("unknown format '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

/// Header plus rows, printed aligned, as CSV, or as a JSON array of objects.
void print_table(std::ostream& out, Format f, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  if (f == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "  " : "") << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - r[i].size(), ' ');
    }
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

struct Target {
  MembershipOracle oracle;
  std::optional<Wfa> automaton;
};

Target resolve_target(const std::string& spec) {
  if (spec.empty()) throw DomainError("a target automaton file or fixture name is required");
  if (std::filesystem::exists(spec)) {
    Wfa A = load_wfa(spec);
    return {MembershipOracle::from_wfa(A), A};
  }
  Fixture fx = fixture(spec);
  return {fx.oracle(), fx.automaton};
}

Json vector_json(const Semiring& S, const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(S.render(x));
  return out;
}

std::string render_vector(const Semiring& S, const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + S.render(v[i]);
  return s + "]";
}

Json solution_json(const Solution& sol) {
  const Semiring& S = sol.semiring;
  Json j;
  j["rows"] = sol.rows;
  j["columns"] = sol.columns;
  j["states"] = sol.states;
  j["initial"] = vector_json(S, sol.initial);
  j["final"] = vector_json(S, sol.final);
  Json t = Json::object();
  for (std::size_t a = 0; a < sol.alphabet.size(); ++a) {
    Json m = Json::array();
    for (const auto& row : sol.transitions[a]) m.push_back(vector_json(S, row));
    t[std::string(1, sol.alphabet[a])] = m;
  }
  j["transitions"] = t;
  return j;
}

void print_automaton(std::ostream& out, Format f, const Wfa& A) {
  if (f == Format::Json) {
    out << wfa_to_json(A).dump(2) << "\n";
    return;
  }
  const Semiring& S = A.semiring;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!S.is_zero(A.initial[i])) rows.push_back({"initial", A.states[i], "", "", S.render(A.initial[i])});
  }
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t a = 0; a < A.alphabet.size(); ++a)
      for (std::size_t k = 0; k < A.size(); ++k)
        if (!S.is_zero(A.transitions[a][i][k]))
          rows.push_back({"transition", A.states[i], std::string(1, A.alphabet[a]), A.states[k],
                          S.render(A.transitions[a][i][k])});
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!S.is_zero(A.final[i])) rows.push_back({"final", A.states[i], "", "", S.render(A.final[i])});
  print_table(out, f, {"kind", "from", "letter", "to", "weight"}, rows);
}

int cmd_eval(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  Wfa A = load_wfa(o.automaton);
  std::vector<Word> ws;
  if (o.word_given) ws.push_back(parse_word(o.word));
  if (!o.words.empty()) for (auto& w : parse_word_list(o.words)) ws.push_back(std::move(w));
  if (ws.empty()) throw DomainError("eval needs --word or --words");
  if (ws.size() == 1 && f == Format::Table) {
    out << A.semiring.render(evaluate(A, ws[0])) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : ws) rows.push_back({render_word(w), A.semiring.render(evaluate(A, w))});
  print_table(out, f, {"word", "value"}, rows);
  return 0;
}

int cmd_hankel(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  Target t = resolve_target(o.automaton.empty() ? o.target : o.automaton);
  auto Q = parse_word_list(o.rows);
  auto T = parse_word_list(o.cols);
  const Semiring& S = t.oracle.semiring();
  if (f == Format::Json) {
    Json vals = Json::array();
    for (const auto& q : Q) vals.push_back(vector_json(S, t.oracle.row(q, T)));
    out << Json{{"rows", Q}, {"columns", T}, {"values", vals}}.dump(2) << "\n";
    return 0;
  }
  if (f == Format::Csv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& q : Q) {
      Vector r = t.oracle.row(q, T);
      for (std::size_t j = 0; j < T.size(); ++j)
        rows.push_back({render_word(q), render_word(T[j]), S.render(r[j])});
    }
    print_table(out, f, {"row", "column", "value"}, rows);
    return 0;
  }
  std::vector<std::string> header{"row"};
  for (const auto& c : T) header.push_back(render_word(c));
  std::vector<std::vector<std::string>> rows;
  for (const auto& q : Q) {
    std::vector<std::string> r{render_word(q)};
    for (const auto& v : t.oracle.row(q, T)) r.push_back(S.render(v));
    rows.push_back(std::move(r));
  }
  print_table(out, f, header, rows);
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  Json j = read_json_file(o.system);
  LinSystem sys{Semiring(SemiringTag::Bool), {}, {}};
  Side side = Side::Left;
  try {
    std::string alphabet;
    if (auto it = j.find("alphabet"); it != j.end())
      for (const auto& a : *it) alphabet += a.get<std::string>();
    if (j.at("semiring").get<std::string>() == "FINLANG" && alphabet.empty()) alphabet = "ab";
    sys.semiring = semiring_from_json(j.at("semiring"), alphabet);
    const std::string s = j.value("side", "left");
    if (s != "left" && s != "right") throw DomainError("side must be left or right");
    side = s == "left" ? Side::Left : Side::Right;
    for (const auto& g : j.at("generators")) {
      Vector v;
      for (const auto& x : g) v.push_back(sys.semiring.parse(x.get<std::string>()));
      sys.generators.push_back(std::move(v));
    }
    for (const auto& x : j.at("target")) sys.target.push_back(sys.semiring.parse(x.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed system: ") + e.what());
  }
  const Semiring& S = sys.semiring;

  if (o.enumerate) {
    if (side != Side::Left) throw DomainError("enumeration is defined for left systems");
    Enumeration e = enumerate_left(sys, o.cap);
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : e.solutions) rows.push_back({render_vector(S, v)});
    if (f == Format::Json) {
      Json sols = Json::array();
      for (const auto& v : e.solutions) sols.push_back(vector_json(S, v));
      out << Json{{"solutions", sols}, {"truncated", e.truncated}}.dump(2) << "\n";
    } else {
      print_table(out, f, {"solution"}, rows);
    }
    return e.truncated ? 2 : 0;
  }

  SolveOutcome r = solve(sys, side);
  if (f == Format::Json) {
    Json res{{"status", status_name(r.status)}, {"method", r.method}};
    res["witness"] = r.witness ? vector_json(S, *r.witness) : Json(nullptr);
    if (!r.bound_note.empty()) res["bound_note"] = r.bound_note;
    out << res.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"status", status_name(r.status)},
                                               {"method", r.method}};
    if (r.witness) rows.push_back({"witness", render_vector(S, *r.witness)});
    if (!r.bound_note.empty()) rows.push_back({"note", r.bound_note});
    print_table(out, f, {"field", "value"}, rows);
  }
  return r.status == SolveStatus::BoundExceeded ? 2 : 0;
}

int report_hypothesis(const HypothesisOutcome& h, Side side, Format f, std::ostream& out) {
  if (f == Format::Json) {
    Json j{{"status", status_name(h.status)}, {"method", h.method}};
    if (h.failing) j["failing"] = h.failing->render(side);
    if (h.solution) {
      j["coefficients"] = solution_json(*h.solution);
      j["automaton"] = wfa_to_json(build_automaton(*h.solution));
    }
    out << j.dump(2) << "\n";
  } else {
    // The automaton always goes out in the file format so it can be fed back to eval.
    out << "status: " << status_name(h.status) << "\n";
    if (h.failing) out << "failing target: " << h.failing->render(side) << "\n";
    if (h.solution) {
      Json c = solution_json(*h.solution);
      out << "coefficients: " << c.dump() << "\n";
      out << wfa_to_json(build_automaton(*h.solution)).dump(2) << "\n";
    }
  }
  return h.status == SolveStatus::BoundExceeded ? 2 : 0;
}

int cmd_hypothesis(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  Target t = resolve_target(o.target);
  auto Q = parse_word_list(o.rows);
  auto T = parse_word_list(o.cols);
  if (o.side != "left" && o.side != "right") throw DomainError("side must be left or right");
  Side side = o.side == "left" ? Side::Left : Side::Right;
  HypothesisOutcome h = side == Side::Left ? solve_lambda(t.oracle, Q, T) : solve_gamma(t.oracle, Q, T);
  return report_hypothesis(h, side, f, out);
}

int cmd_learn(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  Target tg = resolve_target(o.target);
  Teacher t{tg.oracle, {}, TeacherMode::Ally, o.probe_depth, tg.automaton, {}};
  if (o.teacher == "adversary") t.mode = TeacherMode::Adversary;
  else if (o.teacher != "ally") throw DomainError("teacher must be ally or adversary");
  if (o.equiv == "exact") t.equivalence.kind = EquivalenceChecker::Kind::FieldExact;
  else if (o.equiv != "bounded") throw DomainError("equiv must be exact or bounded");
  t.equivalence.depth = o.equiv_depth;

  LearnResult r;
  if (o.strategy == "hkrs") r = run_hkrs(t, o.budget);
  else if (o.strategy == "incremental") r = run_incremental(t, o.budget);
  else if (o.strategy == "enumeration") r = run_enumeration(t, o.budget);
  else throw DomainError("strategy must be hkrs, incremental or enumeration");

  if (!o.transcript.empty()) {
    std::ofstream tf(o.transcript);
    if (!tf) throw DomainError("cannot write '" + o.transcript + "'");
    tf << r.transcript.to_jsonl();
  }
  if (f == Format::Json) {
    Json j{{"outcome", outcome_name(r.outcome)},
           {"solver_calls", r.transcript.solver_calls},
           {"equivalence_queries", r.transcript.equivalence_queries}};
    j["automaton"] = r.automaton ? wfa_to_json(*r.automaton) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "outcome: " << outcome_name(r.outcome) << "\n"
        << "interactions: " << r.transcript.interactions() << " (" << r.transcript.solver_calls
        << " lambda requests, " << r.transcript.equivalence_queries << " equivalence queries)\n";
    if (r.automaton) print_automaton(out, f, *r.automaton);
  }
  return r.outcome == LearnOutcome::Success ? 0 : 2;
}

int cmd_literalize(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  Target t = resolve_target(o.target);
  auto Q = parse_word_list(o.rows);
  auto T = o.cols.empty() ? words_up_to(t.oracle.alphabet(), 3) : parse_word_list(o.cols);
  HypothesisOutcome h = solve_lambda(t.oracle, Q, T);
  if (h.status != SolveStatus::Solved) {
    report_hypothesis(h, Side::Left, f, out);
    return h.status == SolveStatus::BoundExceeded ? 2 : 1;
  }
  LiteralizeResult lit = literalize(t.oracle, *h.solution, o.depth);
  print_automaton(out, f, lit.automaton);
  return 0;
}

int cmd_mirror(const Options& o, std::ostream& out) {
  Wfa M = mirror(load_wfa(o.automaton));
  if (!o.out_path.empty()) save_wfa(M, o.out_path);
  else print_automaton(out, format_of(o.format == "table" ? "json" : o.format), M);
  return 0;
}

std::string flags_text(const ExpectedFlags& e) {
  std::string s;
  auto add = [&](bool b, const char* n) {
    if (b) s += (s.empty() ? "" : " ") + std::string(n);
  };
  add(e.strongly_guessable, "strongly-guessable");
  add(e.guessable && !e.strongly_guessable, "guessable");
  add(e.weakly_guessable && !e.guessable, "weakly-guessable");
  add(e.strongly_coguessable, "strongly-co-guessable");
  add(e.coguessable && !e.strongly_coguessable, "co-guessable");
  add(e.weakly_coguessable && !e.coguessable, "weakly-co-guessable");
  return s.empty() ? "none" : s;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  std::vector<std::vector<std::string>> rows;
  for (const auto& fx : fixtures()) {
    rows.push_back({fx.name, fx.display, fx.semiring.name(), flags_text(fx.expected)});
    if (!o.out_path.empty() && fx.automaton) {
      std::filesystem::create_directories(o.out_path);
      save_wfa(*fx.automaton, (std::filesystem::path(o.out_path) / (fx.name + ".json")).string());
    }
  }
  print_table(out, f, {"name", "display", "semiring", "expected"}, rows);
  return 0;
}

void print_report(std::ostream& out, Format f, const ProbeReport& r) {
  if (f == Format::Json) {
    out << r.to_json().dump(2) << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& x : r.findings) rows.push_back({r.fixture, x.kind, x.parameters.dump(), x.verdict});
  print_table(out, f, {"fixture", "kind", "parameters", "verdict"}, rows);
  if (f == Format::Table) out << "note: " << r.caveat << "\n";
}

int cmd_classify(const Options& o, std::ostream& out) {
  Format f = format_of(o.format);
  if (o.table) {
    TableSummary s = check_expected_table(standard_reports());
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : s.cells)
      rows.push_back({c.row, c.property, c.expected, c.evidence,
                      c.covered ? (c.pass ? "PASS" : "FAIL") : (c.pass ? "supported" : "not covered")});
    print_table(out, f, {"row", "property", "expected", "evidence", "result"}, rows);
    if (f == Format::Table) out << "note: " << s.caveat << "\n";
    return s.all_pass() ? 0 : 3;
  }
  Fixture fx = fixture(o.fixture);
  ProbeReport r;
  r.fixture = fx.display;
  r.caveat = "bounded-scale evidence only";
  r.parameters = {{"witness", o.witness}, {"w_len", o.max_q}};
  if (o.witness == "row") r.findings.push_back(default_row_obstruction(fx, o.max_q));
  else if (o.witness == "column") r.findings.push_back(default_column_obstruction(fx, o.max_q));
  else if (o.witness.empty()) r = probe_weak_guessability(fx, o.max_q, o.max_t);
  else throw DomainError("witness must be row or column");
  print_report(out, f, r);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weighted automata learning toolkit", "wal"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized runs (no current subcommand draws random numbers)");

  auto* eval = app.add_subcommand("eval", "evaluate an automaton on words");
  eval->add_option("--automaton", o.automaton)->required();
  auto* word_opt = eval->add_option("--word", o.word, "single word; \"\" is the empty word");
  eval->add_option("--words", o.words, "comma-separated words");

  auto* hankel = app.add_subcommand("hankel", "print a block of the Hankel matrix");
  hankel->add_option("--automaton", o.automaton);
  hankel->add_option("--target", o.target, "automaton file or fixture name");
  hankel->add_option("--rows", o.rows)->required();
  hankel->add_option("--cols", o.cols)->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve a linear system file");
  solve_cmd->add_option("--system", o.system)->required();
  solve_cmd->add_flag("--enumerate", o.enumerate, "list all left solutions");
  solve_cmd->add_option("--cap", o.cap);

  auto* hyp = app.add_subcommand("hypothesis", "solve Lambda (left) or Gamma (right) and build the automaton");
  hyp->add_option("--target", o.target)->required();
  hyp->add_option("--rows", o.rows)->required();
  hyp->add_option("--cols", o.cols)->required();
  hyp->add_option("--side", o.side)->check(CLI::IsMember({"left", "right"}));

  auto* learn = app.add_subcommand("learn", "run a learning session");
  learn->add_option("--target", o.target)->required();
  learn->add_option("--strategy", o.strategy)->check(CLI::IsMember({"hkrs", "incremental", "enumeration"}));
  learn->add_option("--teacher", o.teacher)->check(CLI::IsMember({"ally", "adversary"}));
  learn->add_option("--equiv", o.equiv, "bounded or exact")->check(CLI::IsMember({"bounded", "exact"}));
  learn->add_option("--equiv-depth", o.equiv_depth);
  learn->add_option("--probe-depth", o.probe_depth);
  learn->add_option("--budget", o.budget);
  learn->add_option("--transcript", o.transcript, "write JSONL events here");

  auto* lit = app.add_subcommand("literalize", "literal automaton for a row set");
  lit->add_option("--target", o.target)->required();
  lit->add_option("--rows", o.rows)->required();
  lit->add_option("--cols", o.cols);
  lit->add_option("--depth", o.depth, "validation depth");

  auto* mir = app.add_subcommand("mirror", "transpose an automaton");
  mir->add_option("--automaton", o.automaton)->required();
  mir->add_option("--out", o.out_path);

  auto* cls = app.add_subcommand("classify", "guessability probes and obstruction witnesses");
  cls->add_option("--fixture", o.fixture);
  cls->add_option("--max-q", o.max_q);
  cls->add_option("--max-t", o.max_t);
  cls->add_option("--witness", o.witness)->check(CLI::IsMember({"row", "column"}));
  cls->add_flag("--table", o.table);

  auto* fix = app.add_subcommand("fixtures", "list fixtures, optionally writing their automata");
  fix->add_option("--write", o.out_path, "directory for <name>.json files");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "wal: " << e.what() << "\n";
    return 1;
  }
  o.word_given = word_opt->count() > 0;

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (hankel->parsed()) return cmd_hankel(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (hyp->parsed()) return cmd_hypothesis(o, out);
    if (learn->parsed()) return cmd_learn(o, out);
    if (lit->parsed()) return cmd_literalize(o, out);
    if (mir->parsed()) return cmd_mirror(o, out);
    if (cls->parsed()) {
      if (!o.table && o.fixture.empty()) throw DomainError("classify needs --fixture or --table");
      return cmd_classify(o, out);
    }
    if (fix->parsed()) return cmd_fixtures(o, out);
  } catch (const DomainError& e) {
    err << "wal: " << e.what() << "\n";
    return 1;
  } catch (const BoundError& e) {
    err << "wal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "wal: internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace wal
