#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wal/hypothesis.hpp"
#include "wal/wfa_io.hpp"

namespace wal {

struct ExpectedFlags {
  bool weakly_guessable = false;
  bool guessable = false;
  bool strongly_guessable = false;
  bool weakly_coguessable = false;
  bool coguessable = false;
  bool strongly_coguessable = false;
};

struct Fixture {
  std::string name;     // f1, f1p, f1pp, f2, f3, f3p, f3pp, f4, f5, f2bar, f3bar, f3pbar
  std::string display;  // f1, f'1, ...
  Semiring semiring;
  std::function<Value(const Word&)> closed_form;
  std::optional<Wfa> automaton;
  ExpectedFlags expected;

  MembershipOracle oracle() const;
};

std::vector<Fixture> fixtures();
/// Accepts the registry name or the primed spelling (f'1, f''3, ...).
Fixture fixture(const std::string& name);
/// The same closed form and automaton shape over another numeric semiring.
Fixture fixture_over(const std::string& name, SemiringTag tag);

/// FINLANG automaton for w -> {w}.
Wfa word_identity_automaton(const std::string& alphabet = "ab");

struct Finding {
  std::string kind;     // row-obstruction, column-obstruction, probe, ...
  Json parameters;
  std::string verdict;  // SOLVED, NO_SOLUTION, BOUND_EXCEEDED, VALIDATED, REFUTED, NONE_FOUND
  Json system;          // the exact system solved, when there is one
};

struct ProbeReport {
  std::string fixture;
  Json parameters;
  std::vector<Finding> findings;
  bool search_capped = false;
  std::string caveat;

  Json to_json() const;
};

ProbeReport probe_weak_guessability(const Fixture& fx, std::size_t max_q, std::size_t max_t,
                                    std::size_t subset_cap = 4096,
                                    std::size_t validate_depth = 8);

Finding witness_row_obstruction(const Fixture& fx, const std::vector<Word>& W,
                                const Word& target, const std::vector<Word>& columns);
Finding witness_column_obstruction(const Fixture& fx, const std::vector<Word>& W,
                                   const Word& target, const std::vector<Word>& rows);

/// The witness shapes used for the table, with N at its default for the given W.
Finding default_row_obstruction(const Fixture& fx, std::size_t w_len = 2);
Finding default_column_obstruction(const Fixture& fx, std::size_t w_len = 2);

/// Runs every documented probe and witness.
std::vector<ProbeReport> standard_reports();

struct TableCell {
  std::string row;       // semiring or fixture
  std::string property;  // A, B, or a fixture class
  std::string expected;
  std::string evidence;
  bool covered = false;
  bool pass = false;
};

struct TableSummary {
  std::vector<TableCell> cells;
  bool all_pass() const;
  std::string caveat;
};

TableSummary check_expected_table(const std::vector<ProbeReport>& reports);

}  // namespace wal
