#include "wal/hypothesis.hpp"

#include <algorithm>

#include "wal/words.hpp"

namespace wal {

Word FailingTarget::shifted(Side side) const {
  if (epsilon) return {};
  return side == Side::Left ? word + letter : letter + word;
}

std::string FailingTarget::render(Side side) const {
  if (epsilon) return "eps";
  if (side == Side::Left) return "(" + render_word(word) + "," + letter + ")";
  return std::string("(") + letter + "," + render_word(word) + ")";
}

namespace {

std::vector<std::string> word_names(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(render_word(w));
  return out;
}

HypothesisOutcome fail(const SolveOutcome& o, FailingTarget t) {
  HypothesisOutcome h;
  h.status = o.status;
  h.failing = std::move(t);
  h.method = o.method;
  h.note = o.bound_note;
  return h;
}

}  // namespace

HypothesisOutcome solve_lambda_block(const Semiring& S, const std::string& alphabet,
                                     const SubHankel& H, const std::vector<std::string>& names,
                                     const SolverLimits& lim) {
  const std::size_t n = H.rows.size();
  LinSystem sys{S, H.base, H.eps_row};
  Solution sol{S, alphabet, H.rows, H.columns, names, {}, {}, H.finals};
  std::string method;

  SolveOutcome o = solve_left(sys, lim);
  if (o.status != SolveStatus::Solved) return fail(o, FailingTarget{});
  sol.initial = *o.witness;
  method = o.method;

  sol.transitions.assign(alphabet.size(), Matrix(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      sys.target = H.extensions[a][q];
      o = solve_left(sys, lim);
      if (o.status != SolveStatus::Solved)
        return fail(o, FailingTarget{false, H.rows[q], alphabet[a]});
      sol.transitions[a][q] = *o.witness;
    }
  HypothesisOutcome h;
  h.status = SolveStatus::Solved;
  h.solution = std::move(sol);
  h.method = method;
  return h;
}

HypothesisOutcome solve_lambda(const MembershipOracle& o, std::vector<Word> Q,
                               std::vector<Word> T, const SolverLimits& lim) {
  Q = shortlex_sorted(std::move(Q));
  T = shortlex_sorted(std::move(T));
  SubHankel H = o.assemble(Q, T);
  HypothesisOutcome h = solve_lambda_block(o.semiring(), o.alphabet(), H, word_names(Q), lim);
  // With eps among the rows the unit vector on it is the canonical initial vector.
  if (h.solution && !Q.empty() && Q.front().empty()) {
    h.solution->initial.assign(Q.size(), o.semiring().zero());
    h.solution->initial[0] = o.semiring().one();
  }
  return h;
}

HypothesisOutcome solve_gamma(const MembershipOracle& o, std::vector<Word> Q,
                              std::vector<Word> T, const SolverLimits& lim) {
  Q = shortlex_sorted(std::move(Q));
  T = shortlex_sorted(std::move(T));
  const Semiring& S = o.semiring();
  const std::string& alphabet = o.alphabet();
  SubHankel H = o.assemble(Q, T);
  const std::size_t nt = T.size();

  // Generators are the columns [t] restricted to Q.
  LinSystem sys{S, {}, H.finals};
  for (std::size_t t = 0; t < nt; ++t) sys.generators.push_back(o.column(T[t], Q));

  Solution sol{S, alphabet, Q, T, word_names(T), H.eps_row, {}, {}};
  SolveOutcome r = solve_right(sys, lim);
  if (r.status != SolveStatus::Solved) return fail(r, FailingTarget{});
  sol.final = *r.witness;
  if (!T.empty() && T.front().empty()) {
    sol.final.assign(nt, S.zero());
    sol.final[0] = S.one();
  }
  std::string method = r.method;

  struct Pending {
    std::size_t a, t;
    Word key;
  };
  std::vector<Pending> order;
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    for (std::size_t t = 0; t < nt; ++t) order.push_back({a, t, alphabet[a] + T[t]});
  std::stable_sort(order.begin(), order.end(),
                   [](const Pending& x, const Pending& y) { return shortlex_less(x.key, y.key); });

  sol.transitions.assign(alphabet.size(), Matrix(nt, Vector(nt, S.zero())));
  for (const auto& p : order) {
    sys.target = o.column(p.key, Q);
    r = solve_right(sys, lim);
    if (r.status != SolveStatus::Solved)
      return fail(r, FailingTarget{false, T[p.t], alphabet[p.a]});
    for (std::size_t s = 0; s < nt; ++s) sol.transitions[p.a][s][p.t] = (*r.witness)[s];
  }
  HypothesisOutcome h;
  h.status = SolveStatus::Solved;
  h.solution = std::move(sol);
  h.method = method;
  return h;
}

Wfa build_automaton(const Solution& s) {
  Wfa A(s.semiring, s.alphabet, s.states);
  A.initial = s.initial;
  A.final = s.final;
  A.transitions = s.transitions;
  A.validate();
  return A;
}

Wfa build_hypothesis(const SolutionLambda& lam) { return build_automaton(lam); }
Wfa build_cohypothesis(const SolutionGamma& gam) { return build_automaton(gam); }

SubHankel assemble_family(const std::string& alphabet, const RowFamily& fam,
                          const std::vector<Word>& T) {
  SubHankel H;
  H.rows = fam.names;
  H.columns = T;
  const std::size_t n = fam.names.size();
  for (std::size_t q = 0; q < n; ++q) {
    Vector row;
    for (const auto& t : T) row.push_back(fam.value(q, t));
    H.base.push_back(std::move(row));
    H.finals.push_back(fam.value(q, Word{}));
  }
  for (char a : alphabet) {
    Matrix ext;
    for (std::size_t q = 0; q < n; ++q) {
      Vector row;
      for (const auto& t : T) row.push_back(fam.value(q, a + t));
      ext.push_back(std::move(row));
    }
    H.extensions.push_back(std::move(ext));
  }
  for (const auto& t : T) H.eps_row.push_back(fam.eps(t));
  return H;
}

RowFamily state_row_family(const Wfa& A) {
  RowFamily fam;
  fam.names = A.states;
  fam.value = [A](std::size_t q, const Word& w) { return state_row_function(A, A.states[q], w); };
  fam.eps = [A](const Word& w) { return evaluate(A, w); };
  return fam;
}

LiteralizeResult literalize(const MembershipOracle& o, const SolutionLambda& lam,
                            std::size_t validate_depth) {
  const Semiring& S = lam.semiring;
  const std::vector<Word>& W = lam.rows;
  const std::vector<Word> Wp = prefix_closure(W);
  const std::size_t nW = W.size();
  const std::size_t n = Wp.size();
  const std::string& alphabet = lam.alphabet;

  auto index_in = [](const std::vector<Word>& ws, const Word& w) -> std::optional<std::size_t> {
    auto it = std::find(ws.begin(), ws.end(), w);
    if (it == ws.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ws.begin());
  };

  // rho(q) expresses the row of q over W; Wp is shortlex sorted so parents come first.
  std::vector<Vector> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& q = Wp[i];
    if (auto k = index_in(W, q)) {
      rho[i].assign(nW, S.zero());
      rho[i][*k] = S.one();
    } else if (q.empty()) {
      rho[i] = lam.initial;
    } else {
      const Vector& parent = rho[*index_in(Wp, q.substr(0, q.size() - 1))];
      const std::size_t a = alphabet.find(q.back());
      rho[i].assign(nW, S.zero());
      for (std::size_t s = 0; s < nW; ++s)
        for (std::size_t p = 0; p < nW; ++p)
          rho[i][s] = S.add(rho[i][s], S.mul(parent[p], lam.transitions[a][p][s]));
    }
  }

  std::vector<std::string> names;
  for (const auto& w : Wp) names.push_back(render_word(w));
  Wfa A(S, alphabet, names);
  A.initial[*index_in(Wp, Word{})] = S.one();
  for (std::size_t i = 0; i < n; ++i) {
    const Word& q = Wp[i];
    A.final[i] = o.query(q);
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (auto child = index_in(Wp, q + alphabet[a])) {
        A.transitions[a][i][*child] = S.one();
        continue;
      }
      for (std::size_t s = 0; s < nW; ++s) {
        Value w = S.zero();
        for (std::size_t p = 0; p < nW; ++p)
          w = S.add(w, S.mul(rho[i][p], lam.transitions[a][p][s]));
        A.transitions[a][i][*index_in(Wp, W[s])] = w;
      }
    }
  }

  for (const auto& w : words_up_to(alphabet, validate_depth)) {
    Value got = evaluate(A, w);
    Value want = o.query(w);
    if (!(got == want))
      throw DomainError("literalize: result disagrees with the target on '" + render_word(w) +
                        "' (" + S.render(got) + " vs " + S.render(want) +
                        "); the coefficients do not solve the full system for Q");
  }
  return {Wp, std::move(A)};
}

}  // namespace wal
