#include "wal/linear_solve.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wal/simplex.hpp"

namespace wal {

namespace {

void validate(const LinSystem& sys) {
  const Semiring& S = sys.semiring;
  for (const auto& x : sys.target) S.check(x);
  for (const auto& g : sys.generators) {
    if (g.size() != sys.target.size()) throw DomainError("generator length differs from target");
    for (const auto& x : g) S.check(x);
  }
}

mpq_class numeric(const Value& v) {
  switch (v.tag()) {
    case SemiringTag::Nat:
    case SemiringTag::Int: return mpq_class(v.as_int());
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: return v.as_rat();
    default: throw std::logic_error("numeric(): not a numeric semiring");
  }
}

/// A[i][p] = generators[p][i], restricted to the listed generator indices.
RatMatrix column_matrix(const LinSystem& sys, const std::vector<std::size_t>& cols) {
  const std::size_t m = sys.target.size();
  RatMatrix A(m, std::vector<mpq_class>(cols.size()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) A[i][k] = numeric(sys.generators[cols[k]][i]);
  return A;
}

std::vector<mpq_class> numeric_target(const LinSystem& sys) {
  std::vector<mpq_class> b;
  for (const auto& x : sys.target) b.push_back(numeric(x));
  return b;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> nonzero_generators(const LinSystem& sys) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < sys.generators.size(); ++p)
    if (!is_zero_vector(sys.semiring, sys.generators[p])) out.push_back(p);
  return out;
}

SolveOutcome solved(Vector w, std::string method) {
  SolveOutcome o;
  o.status = SolveStatus::Solved;
  o.witness = std::move(w);
  o.method = std::move(method);
  return o;
}

SolveOutcome unsolved(std::string method, std::string note = "") {
  SolveOutcome o;
  o.status = SolveStatus::NoSolution;
  o.method = std::move(method);
  o.bound_note = std::move(note);
  return o;
}

// ---- exact elimination over the rationals ------------------------------------------

struct Elimination {
  bool consistent = false;
  std::vector<mpq_class> x;
  std::vector<std::vector<mpq_class>> kernel;
};

Elimination gauss(const RatMatrix& A, const std::vector<mpq_class>& b, std::size_t n) {
  const std::size_t m = b.size();
  RatMatrix M(m);
  for (std::size_t i = 0; i < m; ++i) {
    M[i] = A[i];
    M[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivcols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t r = row;
    while (r < m && M[r][col] == 0) ++r;
    if (r == m) continue;
    std::swap(M[r], M[row]);
    mpq_class piv = M[row][col];
    for (auto& x : M[row]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      mpq_class f = M[i][col];
      for (std::size_t j = col; j <= n; ++j) M[i][j] -= f * M[row][j];
    }
    pivcols.push_back(col);
    ++row;
  }
  Elimination e;
  for (std::size_t i = row; i < m; ++i)
    if (M[i][n] != 0) return e;
  e.consistent = true;
  e.x.assign(n, 0);
  for (std::size_t k = 0; k < pivcols.size(); ++k) e.x[pivcols[k]] = M[k][n];
  std::vector<bool> is_piv(n, false);
  for (auto c : pivcols) is_piv[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<mpq_class> v(n, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivcols.size(); ++k) v[pivcols[k]] = -M[k][f];
    e.kernel.push_back(std::move(v));
  }
  return e;
}

// ---- integer systems via column Hermite normalisation -------------------------------

struct IntSolution {
  bool feasible = false;
  std::vector<mpz_class> x;
  std::vector<std::vector<mpz_class>> kernel;
};

IntSolution hermite_solve(const std::vector<std::vector<mpz_class>>& A,
                          const std::vector<mpz_class>& b, std::size_t n) {
  const std::size_t m = b.size();
  auto H = A;
  std::vector<std::vector<mpz_class>> U(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;

  // Column operations act on H and U alike: new_r = s*c_r + t*c_j, new_j = -(b/g)*c_r + (a/g)*c_j.
  auto combine_cols = [&](std::size_t r, std::size_t j, const mpz_class& s, const mpz_class& t,
                          const mpz_class& u, const mpz_class& v) {
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class x = H[i][r], y = H[i][j];
      H[i][r] = s * x + t * y;
      H[i][j] = u * x + v * y;
    }
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class x = U[i][r], y = U[i][j];
      U[i][r] = s * x + t * y;
      U[i][j] = u * x + v * y;
    }
  };

  std::vector<std::size_t> pivot_row;  // pivot_row[c] for pivot columns c < rank
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m && rank < n; ++i) {
    for (std::size_t j = rank + 1; j < n; ++j) {
      if (H[i][j] == 0) continue;
      mpz_class a = H[i][rank], c = H[i][j], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      combine_cols(rank, j, s, t, mpz_class(-c / g), mpz_class(a / g));
    }
    if (H[i][rank] == 0) continue;
    if (H[i][rank] < 0) combine_cols(rank, rank, -1, 0, -1, 0);
    pivot_row.push_back(i);
    ++rank;
  }

  IntSolution sol;
  std::vector<mpz_class> y(n, 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class r = b[i];
    for (std::size_t c = 0; c < next; ++c) r -= H[i][c] * y[c];
    if (next < rank && pivot_row[next] == i) {
      if (r % H[i][next] != 0) return sol;
      y[next] = r / H[i][next];
      ++next;
    } else if (r != 0) {
      return sol;
    }
  }
  sol.feasible = true;
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < rank; ++c) sol.x[i] += U[i][c] * y[c];
  for (std::size_t c = rank; c < n; ++c) {
    std::vector<mpz_class> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = U[i][c];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<std::vector<mpz_class>> integer_matrix(const LinSystem& sys) {
  const std::size_t m = sys.target.size();
  std::vector<std::vector<mpz_class>> A(m, std::vector<mpz_class>(sys.generators.size()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t p = 0; p < sys.generators.size(); ++p) A[i][p] = sys.generators[p][i].as_int();
  return A;
}

std::vector<mpz_class> integer_target(const LinSystem& sys) {
  std::vector<mpz_class> b;
  for (const auto& x : sys.target) b.push_back(x.as_int());
  return b;
}

// ---- per-semiring strategies --------------------------------------------------------

SolveOutcome solve_rat(const LinSystem& sys) {
  const std::size_t n = sys.generators.size();
  auto e = gauss(column_matrix(sys, all_indices(n)), numeric_target(sys), n);
  if (!e.consistent) return unsolved("gauss");
  Vector w;
  for (const auto& x : e.x) w.push_back(sys.semiring.from_rat(x));
  return solved(std::move(w), "gauss");
}

SolveOutcome solve_int(const LinSystem& sys) {
  const std::size_t n = sys.generators.size();
  auto s = hermite_solve(integer_matrix(sys), integer_target(sys), n);
  if (!s.feasible) return unsolved("hermite");
  Vector w;
  for (const auto& x : s.x) w.push_back(sys.semiring.from_int(x));
  return solved(std::move(w), "hermite");
}

/// Shared shortcuts for the nonnegative numeric semirings.
std::optional<Vector> trivial_nonneg(const LinSystem& sys) {
  const Semiring& S = sys.semiring;
  const std::size_t n = sys.generators.size();
  if (is_zero_vector(S, sys.target)) return Vector(n, S.zero());
  for (std::size_t p = 0; p < n; ++p)
    if (sys.generators[p] == sys.target) {
      Vector w(n, S.zero());
      w[p] = S.one();
      return w;
    }
  return std::nullopt;
}

SolveOutcome solve_nonneg_rat(const LinSystem& sys) {
  if (auto w = trivial_nonneg(sys)) return solved(std::move(*w), "simplex");
  auto nz = nonzero_generators(sys);
  auto x = feasible_point(column_matrix(sys, nz), numeric_target(sys));
  if (!x) return unsolved("simplex");
  Vector w(sys.generators.size(), sys.semiring.zero());
  for (std::size_t k = 0; k < nz.size(); ++k) w[nz[k]] = sys.semiring.from_rat((*x)[k]);
  return solved(std::move(w), "simplex");
}

SolveOutcome solve_nat(const LinSystem& sys, const SolverLimits& lim) {
  if (auto w = trivial_nonneg(sys)) return solved(std::move(*w), "branch-and-bound");
  auto nz = nonzero_generators(sys);
  const RatMatrix A = column_matrix(sys, nz);
  const std::vector<mpq_class> b = numeric_target(sys);
  const std::size_t m = b.size();
  const std::size_t n = nz.size();

  struct Node {
    std::vector<mpz_class> lo;
    std::vector<std::optional<mpz_class>> hi;
  };
  std::vector<Node> stack{Node{std::vector<mpz_class>(n, 0), std::vector<std::optional<mpz_class>>(n)}};
  std::size_t nodes = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++nodes > lim.node_cap) {
      SolveOutcome o;
      o.status = SolveStatus::BoundExceeded;
      o.method = "branch-and-bound";
      o.bound_note = "node cap " + std::to_string(lim.node_cap) + " reached";
      return o;
    }
    // Shift x = lo + y and add one slack row per finite upper bound.
    std::vector<std::size_t> bounded;
    for (std::size_t p = 0; p < n; ++p)
      if (node.hi[p]) bounded.push_back(p);
    const std::size_t cols = n + bounded.size();
    RatMatrix L(m + bounded.size(), std::vector<mpq_class>(cols, 0));
    std::vector<mpq_class> rhs(m + bounded.size());
    bool empty_box = false;
    for (std::size_t i = 0; i < m; ++i) {
      rhs[i] = b[i];
      for (std::size_t p = 0; p < n; ++p) {
        L[i][p] = A[i][p];
        rhs[i] -= A[i][p] * node.lo[p];
      }
    }
    for (std::size_t k = 0; k < bounded.size(); ++k) {
      std::size_t p = bounded[k];
      L[m + k][p] = 1;
      L[m + k][n + k] = 1;
      rhs[m + k] = mpq_class(*node.hi[p] - node.lo[p]);
      if (rhs[m + k] < 0) empty_box = true;
    }
    if (empty_box) continue;
    auto y = feasible_point(L, rhs);
    if (!y) continue;

    std::optional<std::size_t> frac;
    std::vector<mpq_class> x(n);
    for (std::size_t p = 0; p < n; ++p) {
      x[p] = mpq_class(node.lo[p]) + (*y)[p];
      if (!frac && x[p].get_den() != 1) frac = p;
    }
    if (!frac) {
      Vector w(sys.generators.size(), sys.semiring.zero());
      for (std::size_t k = 0; k < n; ++k) w[nz[k]] = sys.semiring.from_rat(x[k]);
      return solved(std::move(w), "branch-and-bound");
    }
    const std::size_t p = *frac;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x[p].get_num_mpz_t(), x[p].get_den_mpz_t());
    Node up = node;
    up.lo[p] = fl + 1;
    Node down = std::move(node);
    if (!down.hi[p] || *down.hi[p] > fl) down.hi[p] = fl;
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));
  }
  return unsolved("branch-and-bound");
}

SolveOutcome solve_bool(const LinSystem& sys) {
  const Semiring& S = sys.semiring;
  Vector w;
  for (const auto& g : sys.generators) {
    bool below = true;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i].as_bool() && !sys.target[i].as_bool()) below = false;
    w.push_back(S.boolean(below));
  }
  if (is_solution(sys, w, Side::Left)) return solved(std::move(w), "residuation");
  return unsolved("residuation");
}

/// Greatest lambda_p with lambda_p (x) g_p <= b componentwise.
Value max_plus_residual(const Semiring& S, const Vector& g, const Vector& b) {
  std::optional<mpq_class> best;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& gi = g[i].as_max();
    if (gi.is_neg_inf()) continue;
    const auto& bi = b[i].as_max();
    if (bi.is_neg_inf()) return S.zero();
    mpq_class d = *bi.v - *gi.v;
    if (!best || d < *best) best = d;
  }
  if (!best) return S.zero();
  if (S.tag() == SemiringTag::NatMax && *best < 0) return S.zero();
  return S.from_rat(*best);
}

SolveOutcome solve_max_plus(const LinSystem& sys) {
  Vector w;
  for (const auto& g : sys.generators) w.push_back(max_plus_residual(sys.semiring, g, sys.target));
  if (is_solution(sys, w, Side::Left)) return solved(std::move(w), "residuation");
  return unsolved("residuation");
}

/// Words u with u.g_i (left) or g_i.u (right) inside b_i for every i.
std::optional<std::vector<Word>> quotient_pool(const Vector& g, const Vector& b, Side side,
                                               std::size_t cap) {
  std::optional<std::size_t> anchor_i;
  for (std::size_t i = 0; i < g.size() && !anchor_i; ++i)
    if (!g[i].as_words().empty()) anchor_i = i;
  if (!anchor_i) return std::vector<Word>{};
  const Word& anchor = g[*anchor_i].as_words().front();
  std::vector<Word> pool;
  for (const auto& z : b[*anchor_i].as_words()) {
    if (z.size() < anchor.size()) continue;
    if (side == Side::Left) {
      if (z.compare(z.size() - anchor.size(), anchor.size(), anchor) == 0)
        pool.push_back(z.substr(0, z.size() - anchor.size()));
    } else if (z.compare(0, anchor.size(), anchor) == 0) {
      pool.push_back(z.substr(anchor.size()));
    }
  }
  if (pool.size() > cap) return std::nullopt;
  std::vector<Word> out;
  for (const auto& u : pool) {
    bool ok = true;
    for (std::size_t i = 0; i < g.size() && ok; ++i) {
      const auto& bi = b[i].as_words();
      for (const auto& w : g[i].as_words()) {
        Word z = side == Side::Left ? u + w : w + u;
        if (!std::binary_search(bi.begin(), bi.end(), z, shortlex_less)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(u);
  }
  return canonical_words(std::move(out));
}

SolveOutcome solve_finlang(const LinSystem& sys, Side side, const SolverLimits& lim) {
  const Semiring& S = sys.semiring;
  Vector w;
  for (const auto& g : sys.generators) {
    auto pool = quotient_pool(g, sys.target, side, lim.pool_cap);
    if (!pool) {
      SolveOutcome o;
      o.status = SolveStatus::BoundExceeded;
      o.method = "quotient";
      o.bound_note = "candidate pool above cap " + std::to_string(lim.pool_cap);
      return o;
    }
    w.push_back(S.words(std::move(*pool)));
  }
  if (is_solution(sys, w, side)) return solved(std::move(w), "quotient");
  return unsolved("quotient");
}

void check_witness(const LinSystem& sys, const SolveOutcome& o, Side side) {
  if (o.status == SolveStatus::Solved && !is_solution(sys, *o.witness, side))
    throw std::logic_error("solver produced an unverified witness (" + o.method + ")");
}

}  // namespace

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "SOLVED";
    case SolveStatus::NoSolution: return "NO_SOLUTION";
    case SolveStatus::BoundExceeded: return "BOUND_EXCEEDED";
  }
  return "?";
}

bool is_zero_vector(const Semiring& S, const Vector& v) {
  return std::all_of(v.begin(), v.end(), [&](const Value& x) { return S.is_zero(x); });
}

Vector combine(const LinSystem& sys, const Vector& coeffs, Side side) {
  const Semiring& S = sys.semiring;
  if (coeffs.size() != sys.generators.size()) throw DomainError("coefficient count mismatch");
  Vector acc(sys.target.size(), S.zero());
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (S.is_zero(coeffs[p])) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const Value& g = sys.generators[p][i];
      acc[i] = S.add(acc[i], side == Side::Left ? S.mul(coeffs[p], g) : S.mul(g, coeffs[p]));
    }
  }
  return acc;
}

bool is_solution(const LinSystem& sys, const Vector& coeffs, Side side) {
  return combine(sys, coeffs, side) == sys.target;
}

SolveOutcome solve_left(const LinSystem& sys, const SolverLimits& lim) {
  validate(sys);
  SolveOutcome o;
  switch (sys.semiring.tag()) {
    case SemiringTag::Rat: o = solve_rat(sys); break;
    case SemiringTag::Int: o = solve_int(sys); break;
    case SemiringTag::Nat: o = solve_nat(sys, lim); break;
    case SemiringTag::NonnegRat: o = solve_nonneg_rat(sys); break;
    case SemiringTag::Bool: o = solve_bool(sys); break;
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: o = solve_max_plus(sys); break;
    case SemiringTag::FinLang: o = solve_finlang(sys, Side::Left, lim); break;
  }
  check_witness(sys, o, Side::Left);
  return o;
}

SolveOutcome solve_right(const LinSystem& sys, const SolverLimits& lim) {
  if (sys.semiring.commutative()) return solve_left(sys, lim);
  validate(sys);
  SolveOutcome o = solve_finlang(sys, Side::Right, lim);
  check_witness(sys, o, Side::Right);
  return o;
}

SolveOutcome solve(const LinSystem& sys, Side side, const SolverLimits& lim) {
  return side == Side::Left ? solve_left(sys, lim) : solve_right(sys, lim);
}

bool enumerable(SemiringTag t) {
  return t == SemiringTag::Bool || t == SemiringTag::Nat || t == SemiringTag::NatMax ||
         t == SemiringTag::FinLang;
}

namespace {

/// Finite per-coefficient domains; zero generators are pinned to 0.
Enumeration enumerate_impl(const LinSystem& sys, Side side, std::size_t cap) {
  const Semiring& S = sys.semiring;
  const std::size_t n = sys.generators.size();
  std::vector<std::vector<Value>> domain(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Vector& g = sys.generators[p];
    if (is_zero_vector(S, g)) {
      domain[p] = {S.zero()};
      continue;
    }
    switch (S.tag()) {
      case SemiringTag::Bool: domain[p] = {S.boolean(false), S.boolean(true)}; break;
      case SemiringTag::Nat: {
        std::optional<mpz_class> ub;
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i].as_int() == 0) continue;
          mpz_class q = sys.target[i].as_int() / g[i].as_int();
          if (!ub || q < *ub) ub = q;
        }
        for (mpz_class k = 0; k <= *ub; ++k) domain[p].push_back(S.from_int(k));
        break;
      }
      case SemiringTag::NatMax: {
        Value top = max_plus_residual(S, g, sys.target);
        domain[p].push_back(S.zero());
        if (!S.is_zero(top))
          for (mpz_class k = 0; k <= top.as_max().v->get_num(); ++k)
            domain[p].push_back(S.from_int(k));
        break;
      }
      case SemiringTag::FinLang: {
        auto pool = quotient_pool(g, sys.target, side, 1000);
        if (!pool || pool->size() > 20) return {{}, true};
        for (std::size_t mask = 0; mask < (std::size_t{1} << pool->size()); ++mask) {
          std::vector<Word> ws;
          for (std::size_t k = 0; k < pool->size(); ++k)
            if (mask >> k & 1) ws.push_back((*pool)[k]);
          domain[p].push_back(S.words(std::move(ws)));
        }
        break;
      }
      default: throw DomainError(std::string("no enumeration for ") + S.name());
    }
  }

  Enumeration out;
  const std::size_t work_cap = cap * 1000;
  std::size_t work = 0;
  Vector current(n, S.zero());
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (out.truncated) return;
    if (++work > work_cap) {
      out.truncated = true;
      return;
    }
    if (p == n) {
      if (is_solution(sys, current, side)) {
        if (out.solutions.size() == cap) {
          out.truncated = true;
          return;
        }
        out.solutions.push_back(current);
      }
      return;
    }
    for (const auto& v : domain[p]) {
      current[p] = v;
      rec(p + 1);
      if (out.truncated) return;
    }
  };
  rec(0);
  return out;
}

}  // namespace

Enumeration enumerate_left(const LinSystem& sys, std::size_t cap) {
  validate(sys);
  if (!enumerable(sys.semiring.tag()))
    throw DomainError(std::string("enumerate_left does not apply to ") + sys.semiring.name());
  for (const auto& g : sys.generators)
    if (is_zero_vector(sys.semiring, g))
      throw DomainError("enumerate_left: a generator is all zero on the columns");
  return enumerate_impl(sys, Side::Left, cap);
}

Alternatives alternative_solutions(const LinSystem& sys, Side side, const Vector& witness,
                                   std::size_t limit) {
  const Semiring& S = sys.semiring;
  Alternatives alt;
  auto keep = [&](Vector v) {
    if (v == witness || alt.solutions.size() >= limit) return;
    if (!is_solution(sys, v, side)) return;
    if (std::find(alt.solutions.begin(), alt.solutions.end(), v) != alt.solutions.end()) return;
    alt.solutions.push_back(std::move(v));
  };

  if (enumerable(S.tag()) && (side == Side::Left || S.commutative() ||
                              S.tag() == SemiringTag::FinLang)) {
    Enumeration e = enumerate_impl(sys, side, limit + 1);
    for (auto& v : e.solutions) keep(std::move(v));
    alt.exhaustive = !e.truncated;
    return alt;
  }

  for (std::size_t p = 0; p < witness.size(); ++p) {
    if (S.is_zero(witness[p])) continue;
    Vector v = witness;
    v[p] = S.zero();
    keep(std::move(v));
  }
  if (is_max_plus(S.tag())) {
    for (std::size_t p = 0; p < witness.size(); ++p) {
      if (S.is_zero(witness[p])) continue;
      Vector v = witness;
      v[p] = S.from_rat(*witness[p].as_max().v - 1);
      keep(std::move(v));
    }
    return alt;
  }
  if (S.tag() == SemiringTag::Rat || S.tag() == SemiringTag::NonnegRat) {
    const std::size_t n = sys.generators.size();
    auto e = gauss(column_matrix(sys, all_indices(n)), numeric_target(sys), n);
    for (const auto& k : e.kernel) {
      for (int dir : {1, -1}) {
        // Largest step keeping coordinates nonnegative, or a unit step over RAT.
        std::optional<mpq_class> step;
        if (S.tag() == SemiringTag::Rat) {
          step = 1;
        } else {
          for (std::size_t p = 0; p < n; ++p) {
            mpq_class d = dir * k[p];
            if (d >= 0) continue;
            mpq_class t = -numeric(witness[p]) / d;
            if (!step || t < *step) step = t;
          }
          if (!step || *step == 0) continue;
        }
        Vector v;
        for (std::size_t p = 0; p < n; ++p)
          v.push_back(S.from_rat(numeric(witness[p]) + *step * dir * k[p]));
        keep(std::move(v));
      }
    }
  } else if (S.tag() == SemiringTag::Int) {
    auto s = hermite_solve(integer_matrix(sys), integer_target(sys), sys.generators.size());
    for (const auto& k : s.kernel)
      for (int dir : {1, -1}) {
        Vector v;
        for (std::size_t p = 0; p < k.size(); ++p)
          v.push_back(S.from_int(witness[p].as_int() + dir * k[p]));
        keep(std::move(v));
      }
  }
  return alt;
}

}  // namespace wal
