#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wal/semiring.hpp"

namespace wal {

/// Weighted automaton: f(w) = initial * M(w_1) ... M(w_k) * final.
struct Wfa {
  Semiring semiring;
  std::string alphabet;
  std::vector<std::string> states;
  Vector initial;
  std::vector<Matrix> transitions;  // [letter][from][to], letters in alphabet order
  Vector final;

  /// All weights start at 0.
  Wfa(Semiring s, std::string alphabet, std::vector<std::string> states);

  std::size_t size() const { return states.size(); }
  std::size_t letter_index(char a) const;
  std::size_t state_index(const std::string& q) const;

  Value& at(const std::string& from, char a, const std::string& to);
  void validate() const;

  friend bool operator==(const Wfa& x, const Wfa& y);
};

/// v * M(a)
Vector step(const Wfa& A, const Vector& v, char a);
/// Row vector initial * M(w).
Vector forward(const Wfa& A, const Word& w);
Value evaluate(const Wfa& A, const Word& w);

Wfa mirror(const Wfa& A);

struct LiteralCertificate {
  std::vector<Word> labels;                     // per state
  std::vector<std::vector<std::size_t>> runs;   // state sequence reading the label
};

std::optional<LiteralCertificate> is_literal(const Wfa& A);

/// e_q * M(w) * final
Value state_row_function(const Wfa& A, const std::string& q, const Word& w);
/// initial * M(w) * e_q
Value state_column_function(const Wfa& A, const std::string& q, const Word& w);

}  // namespace wal
