#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wal/semiring.hpp"

namespace wal {

enum class SolveStatus { Solved, NoSolution, BoundExceeded };
const char* status_name(SolveStatus s);

enum class Side { Left, Right };

/// target = (+)_p coeff_p (x) generators[p]   (left)
/// target = (+)_p generators[p] (x) coeff_p   (right)
struct LinSystem {
  Semiring semiring;
  std::vector<Vector> generators;
  Vector target;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<Vector> witness;
  std::string method;
  std::string bound_note;
};

struct SolverLimits {
  std::size_t pool_cap = 1000;     // FINLANG candidate words per coefficient
  std::size_t node_cap = 200000;   // NAT branch-and-bound nodes
};

SolveOutcome solve_left(const LinSystem& sys, const SolverLimits& lim = {});
SolveOutcome solve_right(const LinSystem& sys, const SolverLimits& lim = {});
SolveOutcome solve(const LinSystem& sys, Side side, const SolverLimits& lim = {});

Vector combine(const LinSystem& sys, const Vector& coeffs, Side side);
bool is_solution(const LinSystem& sys, const Vector& coeffs, Side side);
bool is_zero_vector(const Semiring& S, const Vector& v);

struct Enumeration {
  std::vector<Vector> solutions;
  bool truncated = false;
};

/// Semirings whose left solution sets are finite once zero generators are excluded.
bool enumerable(SemiringTag t);

/// All left solutions, in lexicographic order of the search. Throws DomainError for
/// semirings outside BOOL/NAT/NAT_MAX/FINLANG or when a generator is all zero.
Enumeration enumerate_left(const LinSystem& sys, std::size_t cap = 10000);

/// Other verified solutions near a known witness, used by the adversarial teacher.
/// Exhaustive where the solution set is finite, perturbations of the witness otherwise.
struct Alternatives {
  std::vector<Vector> solutions;
  bool exhaustive = false;
};
Alternatives alternative_solutions(const LinSystem& sys, Side side, const Vector& witness,
                                   std::size_t limit);

}  // namespace wal
