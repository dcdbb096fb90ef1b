#include "wal/hankel.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "wal/words.hpp"

namespace wal {

struct MembershipOracle::Shared {
  Function f;
  std::mutex mu;
  std::unordered_map<Word, Value> cache;
  std::size_t misses = 0;
};

MembershipOracle::MembershipOracle(Semiring S, std::string alphabet, Function f,
                                   std::string label)
    : S_(std::move(S)), alphabet_(std::move(alphabet)), label_(std::move(label)),
      shared_(std::make_shared<Shared>()) {
  std::sort(alphabet_.begin(), alphabet_.end());
  shared_->f = std::move(f);
}

MembershipOracle MembershipOracle::from_wfa(const Wfa& A) {
  return MembershipOracle(A.semiring, A.alphabet, [A](const Word& w) { return evaluate(A, w); },
                          "automaton");
}

Value MembershipOracle::query(const Word& w) const {
  check_word(alphabet_, w);
  {
    std::lock_guard<std::mutex> lock(shared_->mu);
    auto it = shared_->cache.find(w);
    if (it != shared_->cache.end()) return it->second;
  }
  Value v = shared_->f(w);
  S_.check(v);
  std::lock_guard<std::mutex> lock(shared_->mu);
  auto [it, inserted] = shared_->cache.emplace(w, v);
  if (inserted) ++shared_->misses;
  return it->second;
}

std::size_t MembershipOracle::query_count() const {
  std::lock_guard<std::mutex> lock(shared_->mu);
  return shared_->misses;
}

Vector MembershipOracle::row(const Word& u, const std::vector<Word>& T) const {
  Vector out;
  out.reserve(T.size());
  for (const auto& t : T) out.push_back(query(u + t));
  return out;
}

Vector MembershipOracle::column(const Word& v, const std::vector<Word>& Q) const {
  Vector out;
  out.reserve(Q.size());
  for (const auto& q : Q) out.push_back(query(q + v));
  return out;
}

SubHankel MembershipOracle::assemble(const std::vector<Word>& Q,
                                     const std::vector<Word>& T) const {
  SubHankel H;
  H.rows = Q;
  H.columns = T;
  for (const auto& q : Q) H.base.push_back(row(q, T));
  for (char a : alphabet_) {
    Matrix ext;
    for (const auto& q : Q) ext.push_back(row(q + a, T));
    H.extensions.push_back(std::move(ext));
  }
  H.eps_row = row(Word{}, T);
  H.finals = column(Word{}, Q);
  return H;
}

}  // namespace wal
