#include "wal/learner.hpp"

#include <algorithm>
#include <deque>

#include "wal/words.hpp"

namespace wal {

std::string EquivalenceChecker::describe() const {
  return kind == Kind::FieldExact ? "exact" : "bounded(" + std::to_string(depth) + ")";
}

const char* outcome_name(LearnOutcome o) {
  return o == LearnOutcome::Success ? "SUCCESS" : "BUDGET_EXHAUSTED";
}

std::string GameTranscript::to_jsonl() const {
  std::string out;
  for (const auto& e : events) out += e.dump() + "\n";
  return out;
}

std::optional<Word> first_disagreement(const Wfa& H, const MembershipOracle& o,
                                       std::size_t depth) {
  const std::string& letters = o.alphabet();
  const std::size_t k = letters.size();
  std::vector<Word> words = words_up_to(letters, depth);
  std::vector<Vector> fwd(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    fwd[i] = i == 0 ? H.initial : step(H, fwd[(i - 1) / k], words[i].back());
    if (!(H.semiring.dot(fwd[i], H.final) == o.query(words[i]))) return words[i];
  }
  return std::nullopt;
}

namespace {

// Forward-space equivalence over the rationals for the pair (target, hypothesis).
std::optional<Word> field_counterexample(const Wfa& A, const Wfa& H) {
  auto rat = [](const Vector& v) {
    std::vector<mpq_class> out;
    for (const auto& x : v) out.push_back(x.as_rat());
    return out;
  };
  std::string letters = A.alphabet;
  std::sort(letters.begin(), letters.end());

  struct Item {
    Word w;
    Vector va, vh;
  };
  // Basis kept in reduced echelon form: pivot column per row.
  std::vector<std::vector<mpq_class>> basis;
  std::vector<std::size_t> pivots;
  auto independent = [&](std::vector<mpq_class> v) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      mpq_class f = v[pivots[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[r][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
    if (it == v.end()) return false;
    std::size_t p = static_cast<std::size_t>(it - v.begin());
    mpq_class piv = v[p];
    for (auto& x : v) x /= piv;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (basis[r][p] == 0) continue;
      mpq_class f = basis[r][p];
      for (std::size_t j = 0; j < v.size(); ++j) basis[r][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };

  std::deque<Item> queue{{Word{}, A.initial, H.initial}};
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    std::vector<mpq_class> joint = rat(it.va);
    auto vh = rat(it.vh);
    joint.insert(joint.end(), vh.begin(), vh.end());
    if (!independent(std::move(joint))) continue;
    if (!(A.semiring.dot(it.va, A.final) == H.semiring.dot(it.vh, H.final))) return it.w;
    for (char a : letters) queue.push_back({it.w + a, step(A, it.va, a), step(H, it.vh, a)});
  }
  return std::nullopt;
}

}  // namespace

EquivalenceReply equivalence_query(const Teacher& t, const Wfa& H) {
  const Semiring& S = t.oracle.semiring();
  if (!(H.semiring == S)) throw DomainError("hypothesis semiring differs from the target");
  EquivalenceReply r;
  r.verdict = t.equivalence.describe();
  if (t.equivalence.kind == EquivalenceChecker::Kind::FieldExact) {
    if (S.tag() != SemiringTag::Rat) throw DomainError("FIELD_EXACT applies only to RAT");
    if (!t.target) throw DomainError("FIELD_EXACT needs the target as an automaton");
    r.counterexample = field_counterexample(*t.target, H);
  } else {
    r.counterexample = first_disagreement(H, t.oracle, t.equivalence.depth);
  }
  if (r.counterexample && evaluate(H, *r.counterexample) == t.oracle.query(*r.counterexample))
    throw std::logic_error("counterexample failed re-verification");
  r.equal = !r.counterexample;
  return r;
}

namespace {

SolutionLambda restrict_columns(SolutionLambda lam, const std::vector<Word>& T) {
  lam.columns = T;
  return lam;
}

bool wrong_within(const Teacher& t, const SolutionLambda& lam) {
  return first_disagreement(build_hypothesis(lam), t.oracle, t.probe_depth).has_value();
}

}  // namespace

LambdaChoice choose_lambda(const Teacher& t, const std::vector<Word>& Q0,
                           const std::vector<Word>& T0) {
  const std::vector<Word> Q = shortlex_sorted(Q0);
  const std::vector<Word> T = shortlex_sorted(T0);
  LambdaChoice c;
  HypothesisOutcome base = solve_lambda(t.oracle, Q, T, t.limits);
  c.status = base.status;
  c.failing = base.failing;
  if (base.status == SolveStatus::BoundExceeded) {
    c.fidelity = "degraded: " + base.note;
    return c;
  }
  if (base.status == SolveStatus::NoSolution) return c;
  const SolutionLambda& principal = *base.solution;

  if (t.mode == TeacherMode::Ally) {
    std::vector<Word> Tp = T;
    for (auto& w : words_up_to(t.oracle.alphabet(), t.probe_depth)) Tp.push_back(std::move(w));
    HypothesisOutcome ext = solve_lambda(t.oracle, Q, Tp, t.limits);
    if (ext.status == SolveStatus::Solved) {
      c.lambda = restrict_columns(*ext.solution, T);
      c.fidelity = "ally: probe(" + std::to_string(t.probe_depth) + ")";
    } else {
      c.lambda = principal;
      c.fidelity = "ally: probe failed, principal witness";
    }
    return c;
  }

  if (wrong_within(t, principal)) {
    c.lambda = principal;
    c.fidelity = "adversary: principal witness errs";
    return c;
  }
  // Vary one target system at a time over its other solutions. Slot 0 is the initial
  // vector, slot 1 + q*|letters| + a the coefficients of (q,a).
  const Semiring& S = t.oracle.semiring();
  SubHankel H = t.oracle.assemble(Q, T);
  const std::size_t k = t.oracle.alphabet().size();
  auto slot = [k](SolutionLambda& lam, std::size_t i) -> Vector& {
    if (i == 0) return lam.initial;
    return lam.transitions[(i - 1) % k][(i - 1) / k];
  };
  bool exhaustive = true;
  bool found = false;
  for (std::size_t i = 0; i < 1 + Q.size() * k && !found; ++i) {
    const Vector& target = i == 0 ? H.eps_row : H.extensions[(i - 1) % k][(i - 1) / k];
    SolutionLambda cand = principal;
    LinSystem sys{S, H.base, target};
    Alternatives alt = alternative_solutions(sys, Side::Left, slot(cand, i), 64);
    exhaustive = exhaustive && alt.exhaustive;
    for (const auto& v : alt.solutions) {
      slot(cand, i) = v;
      if (wrong_within(t, cand)) {
        c.lambda = std::move(cand);
        found = true;
        break;
      }
    }
  }
  const std::string scope = exhaustive ? "enumerated" : "perturbed";
  if (found) {
    c.fidelity = "adversary: " + scope + " alternative errs";
  } else {
    c.lambda = principal;
    c.fidelity = "adversary: no erring alternative found (" + scope + "), principal witness";
  }
  return c;
}

namespace {

Json words_json(const std::vector<Word>& ws) { return Json(ws); }

class Session {
 public:
  Session(const Teacher& t, std::size_t budget) : t_(t), budget_(budget) {}

  bool can_interact() const { return tr_.interactions() < budget_; }

  std::optional<LambdaChoice> request(const std::vector<Word>& Q, const std::vector<Word>& T) {
    if (!can_interact()) return std::nullopt;
    ++tr_.solver_calls;
    tr_.events.push_back({{"event", "PairQueried"}, {"rows", words_json(Q)}, {"columns", words_json(T)}});
    LambdaChoice c = choose_lambda(t_, Q, T);
    if (c.status == SolveStatus::BoundExceeded) {
      tr_.events.push_back({{"event", "BoundExceeded"}, {"note", c.fidelity}});
      bound_hit_ = true;
      return std::nullopt;
    }
    if (!c.lambda) {
      tr_.events.push_back({{"event", "EmptyDeclared"}, {"failing", c.failing->render(Side::Left)}});
    }
    return c;
  }

  /// Issues the hypothesis; returns the counterexample, or nothing on success/budget end.
  std::optional<Word> test(const LambdaChoice& c, bool& success) {
    success = false;
    Wfa H = build_hypothesis(*c.lambda);
    tr_.events.push_back({{"event", "HypothesisIssued"},
                          {"fidelity", c.fidelity},
                          {"automaton", wfa_to_json(H)}});
    if (!can_interact()) return std::nullopt;
    ++tr_.equivalence_queries;
    EquivalenceReply r = equivalence_query(t_, H);
    if (r.equal) {
      tr_.events.push_back({{"event", "Success"},
                            {"verdict", r.verdict},
                            {"automaton", wfa_to_json(H)},
                            {"solver_calls", tr_.solver_calls},
                            {"equivalence_queries", tr_.equivalence_queries},
                            {"membership_queries", t_.oracle.query_count()}});
      success = true;
      result_ = std::move(H);
      return std::nullopt;
    }
    const Semiring& S = H.semiring;
    tr_.events.push_back({{"event", "Counterexample"},
                          {"word", *r.counterexample},
                          {"target", S.render(t_.oracle.query(*r.counterexample))},
                          {"hypothesis", S.render(evaluate(H, *r.counterexample))}});
    return r.counterexample;
  }

  LearnResult finish() {
    LearnResult res;
    if (result_) {
      res.outcome = LearnOutcome::Success;
      res.automaton = std::move(result_);
    } else {
      res.outcome = LearnOutcome::BudgetExhausted;
      tr_.events.push_back({{"event", "BudgetExhausted"},
                            {"bound_exceeded", bound_hit_},
                            {"solver_calls", tr_.solver_calls},
                            {"equivalence_queries", tr_.equivalence_queries},
                            {"membership_queries", t_.oracle.query_count()}});
    }
    res.transcript = std::move(tr_);
    return res;
  }

  bool stopped() const { return bound_hit_ || !can_interact(); }

 private:
  const Teacher& t_;
  std::size_t budget_;
  GameTranscript tr_;
  std::optional<Wfa> result_;
  bool bound_hit_ = false;
};

}  // namespace

LearnResult run_hkrs(const Teacher& t, std::size_t budget) {
  Session s(t, budget);
  std::vector<Word> Q{Word{}};
  std::vector<Word> T{Word{}};
  while (!s.stopped()) {
    auto c = s.request(Q, T);
    if (!c) break;
    if (!c->lambda) {
      Word next = c->failing->shifted(Side::Left);
      if (c->failing->epsilon || std::find(Q.begin(), Q.end(), next) != Q.end())
        throw std::logic_error("closure target already generated");
      Q = shortlex_sorted([&] { auto v = Q; v.push_back(next); return v; }());
      continue;
    }
    bool success = false;
    auto z = s.test(*c, success);
    if (success || !z) break;
    std::vector<Word> grown = T;
    for (auto& w : suffixes(*z)) grown.push_back(std::move(w));
    T = shortlex_sorted(std::move(grown));
  }
  return s.finish();
}

LearnResult run_incremental(const Teacher& t, std::size_t budget) {
  Session s(t, budget);
  std::size_t i = 0, j = 0;
  const std::string& letters = t.oracle.alphabet();
  while (!s.stopped()) {
    auto c = s.request(words_up_to(letters, i), words_up_to(letters, j));
    if (!c) break;
    if (!c->lambda) {
      ++i;
      continue;
    }
    bool success = false;
    auto z = s.test(*c, success);
    if (success || !z) break;
    ++j;
  }
  return s.finish();
}

std::vector<Word> indexed_word_set(const std::string& alphabet, std::size_t index) {
  if (index == 0) throw DomainError("word set index starts at 1");
  std::size_t bits = 0;
  for (std::size_t x = index; x; x >>= 1) ++bits;
  std::size_t len = 0;
  std::vector<Word> pool = words_up_to(alphabet, len);
  while (pool.size() < bits) pool = words_up_to(alphabet, ++len);
  std::vector<Word> out;
  for (std::size_t k = 0; k < bits; ++k)
    if (index >> k & 1) out.push_back(pool[k]);
  return out;
}

LearnResult run_enumeration(const Teacher& t, std::size_t budget) {
  Session s(t, budget);
  const std::string& letters = t.oracle.alphabet();
  // Cantor diagonals over (row set index, column set index), both starting at 1.
  for (std::size_t d = 2; !s.stopped(); ++d) {
    for (std::size_t k = 1; k < d && !s.stopped(); ++k) {
      auto c = s.request(indexed_word_set(letters, k), indexed_word_set(letters, d - k));
      if (!c) break;
      if (!c->lambda) continue;
      bool success = false;
      s.test(*c, success);
      if (success) return s.finish();
    }
  }
  return s.finish();
}

}  // namespace wal
