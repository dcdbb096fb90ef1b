#include <algorithm>

#include "wal/classify.hpp"
#include "wal/learner.hpp"
#include "wal/words.hpp"

namespace wal {

namespace {

const char* kCaveat =
    "bounded-scale evidence: finite systems only; negative verdicts certify the listed "
    "system, not membership in a class";

Json vector_json(const Semiring& S, const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(S.render(x));
  return out;
}

Json system_json(const LinSystem& sys, Side side) {
  Json gens = Json::array();
  for (const auto& g : sys.generators) gens.push_back(vector_json(sys.semiring, g));
  return {{"semiring", sys.semiring.name()},
          {"side", side == Side::Left ? "left" : "right"},
          {"generators", gens},
          {"target", vector_json(sys.semiring, sys.target)}};
}

/// Size used to pick N: the number itself, or the longest word of a language.
mpz_class magnitude(const Value& v) {
  switch (v.tag()) {
    case SemiringTag::Bool: return v.as_bool() ? 1 : 0;
    case SemiringTag::Nat:
    case SemiringTag::Int: return v.as_int();
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: {
      mpz_class r;
      mpz_cdiv_q(r.get_mpz_t(), v.as_rat().get_num_mpz_t(), v.as_rat().get_den_mpz_t());
      return r;
    }
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: {
      const auto& m = v.as_max();
      if (m.is_neg_inf()) return 0;
      mpz_class r;
      mpz_cdiv_q(r.get_mpz_t(), m.v->get_num_mpz_t(), m.v->get_den_mpz_t());
      return r;
    }
    case SemiringTag::FinLang: {
      std::size_t best = 0;
      for (const auto& w : v.as_words()) best = std::max(best, w.size());
      return static_cast<unsigned long>(best);
    }
  }
  return 0;
}

std::size_t default_n(const MembershipOracle& o, const std::vector<Word>& W, const Word& prefix) {
  mpz_class best = 0;
  for (const auto& w : W) best = std::max(best, magnitude(o.query(prefix + w)));
  return best.get_ui() + 1;
}

Json words_param(const std::vector<Word>& ws) { return Json(ws); }

// Zeroes coefficients one at a time, keeping every change that still solves the system.
Vector sparsest(const LinSystem& sys, Vector x) {
  for (auto& c : x) {
    if (sys.semiring.is_zero(c)) continue;
    Value keep = c;
    c = sys.semiring.zero();
    if (!is_solution(sys, x, Side::Left)) c = keep;
  }
  return x;
}

SolutionLambda sparsified(const MembershipOracle& o, SolutionLambda lam) {
  SubHankel H = o.assemble(lam.rows, lam.columns);
  LinSystem sys{lam.semiring, H.base, H.eps_row};
  lam.initial = sparsest(sys, lam.initial);
  for (std::size_t a = 0; a < lam.transitions.size(); ++a)
    for (std::size_t q = 0; q < lam.rows.size(); ++q) {
      sys.target = H.extensions[a][q];
      lam.transitions[a][q] = sparsest(sys, lam.transitions[a][q]);
    }
  return lam;
}

}  // namespace

Json ProbeReport::to_json() const {
  Json j;
  j["fixture"] = fixture;
  j["parameters"] = parameters;
  Json fs = Json::array();
  for (const auto& f : findings) {
    Json e{{"kind", f.kind}, {"parameters", f.parameters}, {"verdict", f.verdict}};
    if (!f.system.is_null()) e["system"] = f.system;
    fs.push_back(e);
  }
  j["findings"] = fs;
  j["search_capped"] = search_capped;
  j["caveat"] = caveat;
  return j;
}

Finding witness_row_obstruction(const Fixture& fx, const std::vector<Word>& W0,
                                const Word& target, const std::vector<Word>& columns0) {
  const auto W = shortlex_sorted(W0);
  const auto columns = shortlex_sorted(columns0);
  MembershipOracle o = fx.oracle();
  LinSystem sys{fx.semiring, {}, o.row(target, columns)};
  for (const auto& w : W) sys.generators.push_back(o.row(w, columns));
  SolveOutcome r = solve_left(sys);
  Finding f;
  f.kind = "row-obstruction";
  f.parameters = {{"W", words_param(W)}, {"target", target}, {"columns", words_param(columns)}};
  f.verdict = status_name(r.status);
  f.system = system_json(sys, Side::Left);
  return f;
}

Finding witness_column_obstruction(const Fixture& fx, const std::vector<Word>& W0,
                                   const Word& target, const std::vector<Word>& rows0) {
  const auto W = shortlex_sorted(W0);
  const auto rows = shortlex_sorted(rows0);
  MembershipOracle o = fx.oracle();
  LinSystem sys{fx.semiring, {}, o.column(target, rows)};
  for (const auto& w : W) sys.generators.push_back(o.column(w, rows));
  SolveOutcome r = solve_right(sys);
  Finding f;
  f.kind = "column-obstruction";
  f.parameters = {{"W", words_param(W)}, {"target", target}, {"rows", words_param(rows)}};
  f.verdict = status_name(r.status);
  f.system = system_json(sys, Side::Right);
  return f;
}

Finding default_row_obstruction(const Fixture& fx, std::size_t w_len) {
  const std::vector<Word> W = words_up_to("ab", w_len);
  MembershipOracle o = fx.oracle();
  const std::string n = fx.name;
  if (n == "f1") {
    std::size_t N = default_n(o, W, "");
    Finding f = witness_row_obstruction(fx, W, std::string(N + 1, 'a') + "b",
                                        {"b" + std::string(N, 'a'), "b" + std::string(N + 1, 'a')});
    f.parameters["N"] = N;
    return f;
  }
  if (n == "f1p") {
    std::size_t N = default_n(o, W, "");
    Finding f = witness_row_obstruction(fx, W, std::string(N, 'a'), {"", "a"});
    f.parameters["N"] = N;
    return f;
  }
  if (n == "f1pp") {
    std::size_t N = default_n(o, W, "");
    Finding f = witness_row_obstruction(fx, W, std::string(N, 'a') + "b", {"", "a", "b"});
    f.parameters["N"] = N;
    return f;
  }
  if (n == "f2" || n == "f3" || n == "f3p" || n == "f3pp" || n == "f5")
    return witness_row_obstruction(fx, {"", "a", "b"}, "aab", {""});
  if (n == "f4") return witness_row_obstruction(fx, {""}, "ab", {"", "a"});
  throw DomainError("no documented row witness for " + fx.display);
}

Finding default_column_obstruction(const Fixture& fx, std::size_t w_len) {
  const std::vector<Word> W = words_up_to("ab", w_len);
  MembershipOracle o = fx.oracle();
  const std::string n = fx.name;
  if (n == "f2" || n == "f3" || n == "f3p" || n == "f3pp" || n == "f5") {
    std::size_t N = default_n(o, W, "a");
    Finding f = witness_column_obstruction(fx, W, std::string(N, 'a'), {"a", "b"});
    f.parameters["N"] = N;
    return f;
  }
  if (n == "f2bar" || n == "f3bar" || n == "f3pbar")
    return witness_column_obstruction(fx, {"", "a", "b"}, "baa", {""});
  if (n == "f4") return witness_column_obstruction(fx, {""}, "ab", {"", "a"});
  throw DomainError("no documented column witness for " + fx.display);
}

ProbeReport probe_weak_guessability(const Fixture& fx, std::size_t max_q, std::size_t max_t,
                                    std::size_t subset_cap, std::size_t validate_depth) {
  ProbeReport rep;
  rep.fixture = fx.display;
  rep.parameters = {{"max_q", max_q}, {"max_t", max_t}, {"subset_cap", subset_cap},
                    {"validate_depth", validate_depth}};
  rep.caveat = kCaveat;
  MembershipOracle o = fx.oracle();
  const std::vector<Word> pool = words_up_to("ab", max_q);
  const std::vector<Word> T = words_up_to("ab", max_t);
  std::size_t tried = 0;
  bool found = false;

  // Subsets by increasing size, each size in lexicographic order of index tuples.
  for (std::size_t size = 1; size <= pool.size() && !found && !rep.search_capped; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (tried++ == subset_cap) {
        rep.search_capped = true;
        break;
      }
      std::vector<Word> Q;
      for (auto i : idx) Q.push_back(pool[i]);
      HypothesisOutcome h = solve_lambda(o, Q, T);
      if (h.status == SolveStatus::Solved) {
        // The principal witness can overshoot outside T; its sparsest reduction is a
        // second element of the same solution set.
        const SolutionLambda candidates[] = {*h.solution, sparsified(o, *h.solution)};
        const char* labels[] = {"principal", "sparsest"};
        for (int c = 0; c < 2 && !found; ++c) {
          auto bad = first_disagreement(build_hypothesis(candidates[c]), o, validate_depth);
          Finding f;
          f.kind = "probe";
          f.parameters = {{"Q", words_param(Q)}, {"T_max", max_t}, {"witness", labels[c]}};
          if (bad) {
            f.verdict = "REFUTED";
            f.parameters["disagreement"] = *bad;
          } else {
            f.verdict = "VALIDATED";
            found = true;
          }
          rep.findings.push_back(std::move(f));
        }
        if (found) break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  if (!found) {
    Finding f;
    f.kind = "probe";
    f.parameters = {{"subsets_tried", std::min(tried, subset_cap)}};
    f.verdict = "NONE_FOUND";
    rep.findings.push_back(std::move(f));
  }
  return rep;
}

namespace {

ProbeReport report_for(const std::string& label) {
  ProbeReport r;
  r.fixture = label;
  r.caveat = kCaveat;
  return r;
}

}  // namespace

std::vector<ProbeReport> standard_reports() {
  std::vector<ProbeReport> out;
  for (const auto& fx : fixtures()) {
    const std::string& n = fx.name;
    ProbeReport r = report_for(fx.display);
    if (n == "f1" || n == "f1p" || n == "f1pp") r.findings.push_back(default_row_obstruction(fx));
    if (n == "f2" || n == "f3" || n == "f3p" || n == "f3pp" || n == "f5" || n == "f4") {
      r.findings.push_back(default_row_obstruction(fx));
      r.findings.push_back(default_column_obstruction(fx));
      ProbeReport p = probe_weak_guessability(fx, n == "f4" ? 0 : 1, 2);
      for (auto& f : p.findings) r.findings.push_back(std::move(f));
    }
    if (n == "f1") {
      ProbeReport p = probe_weak_guessability(fx, 2, 3);
      for (auto& f : p.findings) r.findings.push_back(std::move(f));
    }
    if (n == "f3bar") r.findings.push_back(default_column_obstruction(fx));
    if (!r.findings.empty()) out.push_back(std::move(r));
  }
  // Variants over the other semirings named in the collapse table.
  for (SemiringTag tag : {SemiringTag::IntMax, SemiringTag::RatMax}) {
    Fixture f1 = fixture_over("f1", tag);
    ProbeReport r = report_for(std::string("f1@") + tag_name(tag));
    r.findings.push_back(default_row_obstruction(f1));
    out.push_back(std::move(r));
  }
  {
    Fixture f1p = fixture_over("f1p", SemiringTag::NonnegRat);
    ProbeReport r = report_for("f'1@NONNEG_RAT");
    r.findings.push_back(default_row_obstruction(f1p));
    out.push_back(std::move(r));
  }
  {
    Fixture f2 = fixture_over("f2", SemiringTag::RatMax);
    ProbeReport r = report_for("f2@RAT_MAX");
    r.findings.push_back(default_column_obstruction(f2));
    ProbeReport p = probe_weak_guessability(f2, 1, 2);
    for (auto& f : p.findings) r.findings.push_back(std::move(f));
    out.push_back(std::move(r));
  }
  return out;
}

bool TableSummary::all_pass() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const TableCell& c) { return !c.covered || c.pass; });
}

namespace {

std::optional<std::string> verdict_of(const std::vector<ProbeReport>& reports,
                                      const std::string& fixture, const std::string& kind,
                                      const std::string& wanted) {
  for (const auto& r : reports) {
    if (r.fixture != fixture) continue;
    std::optional<std::string> last;
    for (const auto& f : r.findings) {
      if (f.kind != kind) continue;
      if (f.verdict == wanted) return f.verdict;
      last = f.verdict;
    }
    return last;
  }
  return std::nullopt;
}

bool has(const std::vector<ProbeReport>& reports, const std::string& fixture,
         const std::string& kind, const std::string& wanted) {
  auto v = verdict_of(reports, fixture, kind, wanted);
  return v && *v == wanted;
}

}  // namespace

TableSummary check_expected_table(const std::vector<ProbeReport>& reports) {
  TableSummary s;
  s.caveat = kCaveat;
  auto cell = [&](std::string row, std::string prop, std::string expected, std::string evidence,
                  bool covered, bool pass) {
    s.cells.push_back({std::move(row), std::move(prop), std::move(expected), std::move(evidence),
                       covered, pass});
  };
  auto obstruction = [&](const std::string& fx) { return has(reports, fx, "row-obstruction", "NO_SOLUTION"); };
  auto co_obstruction = [&](const std::string& fx) { return has(reports, fx, "column-obstruction", "NO_SOLUTION"); };
  auto weakly = [&](const std::string& fx) { return has(reports, fx, "probe", "VALIDATED"); };

  for (const char* r : {"BOOL", "RAT", "INT"}) {
    cell(r, "A", "Yes", "theorem; not certifiable by finite probes", false, false);
    cell(r, "B", "Yes", "theorem; not certifiable by finite probes", false, false);
  }
  cell("NAT", "A", "No (f'1)", "f'1 row obstruction", true, obstruction("f'1"));
  cell("NAT", "B", "Yes", "theorem; supporting witness f'3 weakly guessable", false, weakly("f'3"));
  cell("NONNEG_RAT", "A", "No (f'1)", "f'1@NONNEG_RAT row obstruction", true,
       obstruction("f'1@NONNEG_RAT"));
  cell("NONNEG_RAT", "B", "Yes", "theorem; supporting witness f5 weakly guessable", false, weakly("f5"));
  cell("FINLANG", "A", "No (f''1)", "f''1 row obstruction", true, obstruction("f''1"));
  cell("FINLANG", "B", "Yes", "theorem; supporting witness f''3 weakly guessable", false, weakly("f''3"));
  cell("NAT_MAX", "A", "No (f1)", "f1 row obstruction", true, obstruction("f1"));
  cell("NAT_MAX", "B", "Yes", "theorem; supporting witness f3 weakly guessable", false, weakly("f3"));
  cell("INT_MAX", "A", "No (f1)", "f1@INT_MAX row obstruction", true, obstruction("f1@INT_MAX"));
  cell("INT_MAX", "B", "No (f2)",
       "f2 weakly guessable (probe); non-guessability only via learner divergence", true,
       weakly("f2"));
  cell("RAT_MAX", "A", "No (f1)", "f1@RAT_MAX row obstruction", true, obstruction("f1@RAT_MAX"));
  cell("RAT_MAX", "B", "No (f2)",
       "f2@RAT_MAX weakly guessable (probe); non-guessability only via learner divergence", true,
       weakly("f2@RAT_MAX"));

  for (const char* fx : {"f1", "f'1", "f''1"})
    cell(fx, "not weakly guessable", "obstruction fires", "row obstruction", true, obstruction(fx));
  cell("f1", "no probe witness", "none found", "probe max_q=2 max_t=3", true,
       has(reports, "f1", "probe", "NONE_FOUND"));
  for (const char* fx : {"f3", "f'3", "f''3", "f5"})
    cell(fx, "strongly guessable, not weakly co-guessable",
         "positive row witness and column obstruction", "row witness + probe + column obstruction",
         true,
         has(reports, fx, "row-obstruction", "SOLVED") && weakly(fx) && co_obstruction(fx));
  cell("f2", "weakly guessable, not weakly co-guessable", "probe witness and column obstruction",
       "probe + column obstruction", true, weakly("f2") && co_obstruction("f2"));
  cell("f3bar", "co-generated by columns", "positive column witness", "column witness", true,
       has(reports, "f3bar", "column-obstruction", "SOLVED"));
  cell("f4", "every class", "all witnesses positive", "row + column witness + probe", true,
       has(reports, "f4", "row-obstruction", "SOLVED") &&
           has(reports, "f4", "column-obstruction", "SOLVED") && weakly("f4"));
  return s;
}

}  // namespace wal
