#pragma once

#include <random>

#include "wal/wfa.hpp"

namespace wal {

using Rng = std::mt19937_64;

/// Integers in [-20,20] (clipped at 0 where negatives are not allowed), denominators in
/// [1,20], -inf with probability 1/5 in max-plus, word sets of at most 4 words of length
/// at most 3.
Value random_value(const Semiring& S, Rng& rng);

struct WeightRange {
  int lo = -3;
  int hi = 3;
  int max_den = 1;
  double zero_prob = 0.3;
};

Value random_weight(const Semiring& S, Rng& rng, const WeightRange& r);
Wfa random_wfa(const Semiring& S, const std::string& alphabet, std::size_t states, Rng& rng,
               const WeightRange& r);

}  // namespace wal
