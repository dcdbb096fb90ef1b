#include "wal/wfa.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wal {

namespace {

Vector vec_mat(const Semiring& S, const Vector& v, const Matrix& M) {
  const std::size_t n = v.size();
  Vector out(n, S.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (S.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (S.is_zero(M[i][j])) continue;
      out[j] = S.add(out[j], S.mul(v[i], M[i][j]));
    }
  }
  return out;
}

Vector mat_vec(const Semiring& S, const Matrix& M, const Vector& v) {
  const std::size_t n = v.size();
  Vector out(n, S.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (S.is_zero(M[i][j]) || S.is_zero(v[j])) continue;
      out[i] = S.add(out[i], S.mul(M[i][j], v[j]));
    }
  return out;
}

}  // namespace

Wfa::Wfa(Semiring s, std::string alpha, std::vector<std::string> st)
    : semiring(std::move(s)), alphabet(std::move(alpha)), states(std::move(st)) {
  const std::size_t n = states.size();
  initial.assign(n, semiring.zero());
  final.assign(n, semiring.zero());
  transitions.assign(alphabet.size(), Matrix(n, Vector(n, semiring.zero())));
  std::set<char> seen(alphabet.begin(), alphabet.end());
  if (seen.size() != alphabet.size()) throw DomainError("duplicate letter in alphabet");
  std::set<std::string> names(states.begin(), states.end());
  if (names.size() != states.size()) throw DomainError("duplicate state name");
}

std::size_t Wfa::letter_index(char a) const {
  auto pos = alphabet.find(a);
  if (pos == std::string::npos) throw DomainError(std::string("unknown letter '") + a + "'");
  return pos;
}

std::size_t Wfa::state_index(const std::string& q) const {
  auto it = std::find(states.begin(), states.end(), q);
  if (it == states.end()) throw DomainError("unknown state '" + q + "'");
  return static_cast<std::size_t>(it - states.begin());
}

Value& Wfa::at(const std::string& from, char a, const std::string& to) {
  return transitions[letter_index(a)][state_index(from)][state_index(to)];
}

void Wfa::validate() const {
  const std::size_t n = states.size();
  if (initial.size() != n || final.size() != n || transitions.size() != alphabet.size())
    throw DomainError("automaton shape mismatch");
  for (const auto& x : initial) semiring.check(x);
  for (const auto& x : final) semiring.check(x);
  for (const auto& M : transitions) {
    if (M.size() != n) throw DomainError("transition matrix shape mismatch");
    for (const auto& row : M) {
      if (row.size() != n) throw DomainError("transition matrix shape mismatch");
      for (const auto& x : row) semiring.check(x);
    }
  }
}

bool operator==(const Wfa& x, const Wfa& y) {
  return x.semiring == y.semiring && x.alphabet == y.alphabet && x.states == y.states &&
         x.initial == y.initial && x.transitions == y.transitions && x.final == y.final;
}

Vector step(const Wfa& A, const Vector& v, char a) {
  return vec_mat(A.semiring, v, A.transitions[A.letter_index(a)]);
}

Vector forward(const Wfa& A, const Word& w) {
  Vector v = A.initial;
  for (char a : w) v = vec_mat(A.semiring, v, A.transitions[A.letter_index(a)]);
  return v;
}

Value evaluate(const Wfa& A, const Word& w) { return A.semiring.dot(forward(A, w), A.final); }

Wfa mirror(const Wfa& A) {
  Wfa B(A.semiring, A.alphabet, A.states);
  B.initial = A.final;
  B.final = A.initial;
  const std::size_t n = A.size();
  for (std::size_t a = 0; a < A.alphabet.size(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) B.transitions[a][j][i] = A.transitions[a][i][j];
  return B;
}

std::optional<LiteralCertificate> is_literal(const Wfa& A) {
  const Semiring& S = A.semiring;
  const std::size_t n = A.size();
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n; ++i) {
    if (S.is_zero(A.initial[i])) continue;
    if (start || !S.is_one(A.initial[i])) return std::nullopt;
    start = i;
  }
  if (!start) return std::nullopt;

  std::string letters = A.alphabet;
  std::sort(letters.begin(), letters.end());
  LiteralCertificate cert;
  cert.labels.assign(n, Word{});
  cert.runs.assign(n, {});
  std::vector<bool> reached(n, false);
  reached[*start] = true;
  cert.runs[*start] = {*start};
  std::deque<std::size_t> queue{*start};
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (char a : letters) {
      const Vector& row = A.transitions[A.letter_index(a)][s];
      std::optional<std::size_t> succ;
      bool unique = true;
      for (std::size_t t = 0; t < n; ++t) {
        if (S.is_zero(row[t])) continue;
        if (succ) unique = false;
        succ = t;
      }
      if (!succ || !unique || !S.is_one(row[*succ]) || reached[*succ]) continue;
      reached[*succ] = true;
      cert.labels[*succ] = cert.labels[s] + a;
      cert.runs[*succ] = cert.runs[s];
      cert.runs[*succ].push_back(*succ);
      queue.push_back(*succ);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return std::nullopt;
  return cert;
}

Value state_row_function(const Wfa& A, const std::string& q, const Word& w) {
  const std::size_t qi = A.state_index(q);
  Vector v = A.final;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    v = mat_vec(A.semiring, A.transitions[A.letter_index(*it)], v);
  return v[qi];
}

Value state_column_function(const Wfa& A, const std::string& q, const Word& w) {
  const std::size_t qi = A.state_index(q);
  return forward(A, w)[qi];
}

}  // namespace wal
