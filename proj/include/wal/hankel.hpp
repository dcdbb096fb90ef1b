#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wal/wfa.hpp"

namespace wal {

/// Finite block of the Hankel matrix for rows Q and columns T.
struct SubHankel {
  std::vector<Word> rows;
  std::vector<Word> columns;
  Matrix base;                     // base[q][t] = f(q t)
  std::vector<Matrix> extensions;  // extensions[a][q][t] = f(q a t), letters in sorted order
  Vector eps_row;                  // f(t)
  Vector finals;                   // f(q)
};

/// Cached membership queries. Copies share the cache.
class MembershipOracle {
 public:
  using Function = std::function<Value(const Word&)>;

  MembershipOracle(Semiring S, std::string alphabet, Function f, std::string label = "");
  static MembershipOracle from_wfa(const Wfa& A);

  const Semiring& semiring() const { return S_; }
  /// Letters in sorted order.
  const std::string& alphabet() const { return alphabet_; }
  const std::string& label() const { return label_; }

  Value query(const Word& w) const;
  Value entry(const Word& u, const Word& v) const { return query(u + v); }
  Vector row(const Word& u, const std::vector<Word>& T) const;
  Vector column(const Word& v, const std::vector<Word>& Q) const;
  Vector shift_row(const Word& v, const Word& u, const std::vector<Word>& T) const {
    return row(v + u, T);
  }
  SubHankel assemble(const std::vector<Word>& Q, const std::vector<Word>& T) const;

  /// Cache misses so far.
  std::size_t query_count() const;

 private:
  struct Shared;
  Semiring S_;
  std::string alphabet_;
  std::string label_;
  std::shared_ptr<Shared> shared_;
};

}  // namespace wal
