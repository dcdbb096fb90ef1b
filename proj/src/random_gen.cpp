#include "wal/random_gen.hpp"

#include <algorithm>

namespace wal {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

mpq_class rat(long n, long d) {
  mpq_class q{mpz_class(n), mpz_class(d)};
  q.canonicalize();
  return q;
}

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

Value random_words(const Semiring& S, Rng& rng, std::size_t max_words, std::size_t max_len) {
  const std::string& sigma = S.id().alphabet;
  std::vector<Word> ws;
  const long n = uniform(rng, 0, static_cast<long>(max_words));
  for (long i = 0; i < n; ++i) {
    Word w;
    const long len = uniform(rng, 0, static_cast<long>(max_len));
    for (long k = 0; k < len; ++k) w += sigma[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(sigma.size()) - 1))];
    ws.push_back(std::move(w));
  }
  return S.words(std::move(ws));
}

}  // namespace

Value random_value(const Semiring& S, Rng& rng) {
  switch (S.tag()) {
    case SemiringTag::Bool: return S.boolean(chance(rng, 0.5));
    case SemiringTag::Nat: return S.from_int(uniform(rng, 0, 20));
    case SemiringTag::Int: return S.from_int(uniform(rng, -20, 20));
    case SemiringTag::Rat: return S.from_rat(rat(uniform(rng, -20, 20), uniform(rng, 1, 20)));
    case SemiringTag::NonnegRat: return S.from_rat(rat(uniform(rng, 0, 20), uniform(rng, 1, 20)));
    case SemiringTag::NatMax:
      if (chance(rng, 0.2)) return S.zero();
      return S.from_int(uniform(rng, 0, 20));
    case SemiringTag::IntMax:
      if (chance(rng, 0.2)) return S.zero();
      return S.from_int(uniform(rng, -20, 20));
    case SemiringTag::RatMax:
      if (chance(rng, 0.2)) return S.zero();
      return S.from_rat(rat(uniform(rng, -20, 20), uniform(rng, 1, 20)));
    case SemiringTag::FinLang: return random_words(S, rng, 4, 3);
  }
  throw std::logic_error("bad tag");
}

Value random_weight(const Semiring& S, Rng& rng, const WeightRange& r) {
  if (chance(rng, r.zero_prob)) return S.zero();
  switch (S.tag()) {
    case SemiringTag::Bool: return S.one();
    case SemiringTag::FinLang: return random_words(S, rng, 2, 2);
    default: break;
  }
  long lo = r.lo;
  if (S.tag() == SemiringTag::Nat || S.tag() == SemiringTag::NonnegRat ||
      S.tag() == SemiringTag::NatMax)
    lo = std::max(lo, 0L);
  const long den = (S.tag() == SemiringTag::Rat || S.tag() == SemiringTag::NonnegRat ||
                    S.tag() == SemiringTag::RatMax)
                       ? uniform(rng, 1, r.max_den)
                       : 1;
  const long num = uniform(rng, lo * den, static_cast<long>(r.hi) * den);
  return S.from_rat(rat(num, den));
}

Wfa random_wfa(const Semiring& S, const std::string& alphabet, std::size_t states, Rng& rng,
               const WeightRange& r) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  Wfa A(S, alphabet, names);
  for (std::size_t i = 0; i < states; ++i) {
    A.initial[i] = random_weight(S, rng, r);
    A.final[i] = random_weight(S, rng, r);
    for (auto& M : A.transitions)
      for (std::size_t j = 0; j < states; ++j) M[i][j] = random_weight(S, rng, r);
  }
  return A;
}

}  // namespace wal
