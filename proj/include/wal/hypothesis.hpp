#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wal/hankel.hpp"
#include "wal/linear_solve.hpp"

namespace wal {

/// A system that failed: the epsilon row/column, or the (q,a) row / (a,t) column.
struct FailingTarget {
  bool epsilon = true;
  Word word;  // q for rows, t for columns
  char letter = 0;

  /// The word whose row (or column) could not be generated: qa or at.
  Word shifted(Side side) const;
  std::string render(Side side) const;
};

/// One element of Lambda_{Q,T} (rows) or Gamma_{Q,T} (columns) together with the data
/// needed to turn it into an automaton.
struct Solution {
  Semiring semiring;
  std::string alphabet;             // sorted
  std::vector<Word> rows;           // Q
  std::vector<Word> columns;        // T
  std::vector<std::string> states;  // state names, one per generator
  Vector initial;
  std::vector<Matrix> transitions;  // [letter][from][to]
  Vector final;
};
using SolutionLambda = Solution;
using SolutionGamma = Solution;

struct HypothesisOutcome {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<Solution> solution;
  std::optional<FailingTarget> failing;
  std::string method;
  std::string note;
};

/// Left systems over the rows Q restricted to T; targets tried eps first, then (q,a)
/// in shortlex order of qa.
HypothesisOutcome solve_lambda(const MembershipOracle& o, std::vector<Word> Q,
                               std::vector<Word> T, const SolverLimits& lim = {});
HypothesisOutcome solve_lambda_block(const Semiring& S, const std::string& alphabet,
                                     const SubHankel& H, const std::vector<std::string>& names,
                                     const SolverLimits& lim = {});

/// Right systems over the columns T restricted to Q.
HypothesisOutcome solve_gamma(const MembershipOracle& o, std::vector<Word> Q,
                              std::vector<Word> T, const SolverLimits& lim = {});

/// States Q, initial lambda_Q, final f(q), q -a-> p weighted lambda_{q,a,p}.
Wfa build_hypothesis(const SolutionLambda& lam);
/// States T, initial f(t), final gamma_T, s -a-> t weighted gamma_{s,a,t}.
Wfa build_cohypothesis(const SolutionGamma& gam);
Wfa build_automaton(const Solution& s);

/// Generators given as functions rather than Hankel rows, e.g. the state functions of an
/// automaton. value(q, w) is the q-th generator at w; eps(w) is the row to reproduce.
struct RowFamily {
  std::vector<std::string> names;
  std::function<Value(std::size_t, const Word&)> value;
  std::function<Value(const Word&)> eps;
};
SubHankel assemble_family(const std::string& alphabet, const RowFamily& fam,
                          const std::vector<Word>& T);
RowFamily state_row_family(const Wfa& A);

struct LiteralizeResult {
  std::vector<Word> rows;  // prefix closure of Q, one state each
  Wfa automaton;
};

/// Literal automaton equivalent to the hypothesis of lam, checked against the oracle on
/// all words up to validate_depth. A mismatch throws DomainError: lam is not a global
/// solution for Q.
LiteralizeResult literalize(const MembershipOracle& o, const SolutionLambda& lam,
                            std::size_t validate_depth = 8);

}  // namespace wal
