#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wal/hypothesis.hpp"
#include "wal/wfa_io.hpp"

namespace wal {

enum class TeacherMode { Ally, Adversary };

struct EquivalenceChecker {
  enum class Kind { FieldExact, Bounded };
  Kind kind = Kind::Bounded;
  std::size_t depth = 6;

  std::string describe() const;
};

struct Teacher {
  MembershipOracle oracle;
  EquivalenceChecker equivalence;
  TeacherMode mode = TeacherMode::Ally;
  std::size_t probe_depth = 6;
  std::optional<Wfa> target;  // needed by FIELD_EXACT
  SolverLimits limits;
};

struct EquivalenceReply {
  bool equal = false;
  std::optional<Word> counterexample;
  std::string verdict;  // "exact" or "bounded(D)"
};

EquivalenceReply equivalence_query(const Teacher& t, const Wfa& H);

/// Shortlex-first word of length <= depth where H and the oracle differ.
std::optional<Word> first_disagreement(const Wfa& H, const MembershipOracle& o,
                                       std::size_t depth);

struct LambdaChoice {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<SolutionLambda> lambda;  // empty means Lambda_{Q,T} was declared empty
  std::optional<FailingTarget> failing;
  std::string fidelity;
};

LambdaChoice choose_lambda(const Teacher& t, const std::vector<Word>& Q,
                           const std::vector<Word>& T);

struct GameTranscript {
  std::vector<Json> events;
  std::size_t solver_calls = 0;
  std::size_t equivalence_queries = 0;

  std::size_t interactions() const { return solver_calls + equivalence_queries; }
  std::string to_jsonl() const;
};

enum class LearnOutcome { Success, BudgetExhausted };
const char* outcome_name(LearnOutcome o);

struct LearnResult {
  LearnOutcome outcome = LearnOutcome::BudgetExhausted;
  std::optional<Wfa> automaton;
  GameTranscript transcript;
};

/// Budgets count teacher interactions: lambda requests plus equivalence queries.
LearnResult run_hkrs(const Teacher& t, std::size_t budget);
LearnResult run_incremental(const Teacher& t, std::size_t budget);
LearnResult run_enumeration(const Teacher& t, std::size_t budget);

/// The i-th finite nonempty word set: bit k of (i) selects the k-th shortlex word.
std::vector<Word> indexed_word_set(const std::string& alphabet, std::size_t index);

}  // namespace wal
