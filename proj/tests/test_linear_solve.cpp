#include <doctest.h>

#include "oracles.hpp"
#include "wal/random_gen.hpp"

using namespace wal;

namespace {

LinSystem ints(SemiringTag tag, std::vector<std::vector<long>> gens, std::vector<long> target) {
  Semiring S(tag);
  auto val = [&](long x) { return x == -999 ? S.neg_inf() : S.from_int(x); };
  LinSystem sys{S, {}, {}};
  for (const auto& g : gens) {
    Vector v;
    for (long x : g) v.push_back(val(x));
    sys.generators.push_back(v);
  }
  for (long x : target) sys.target.push_back(val(x));
  return sys;
}

LinSystem langs(std::vector<std::vector<std::vector<Word>>> gens, std::vector<std::vector<Word>> target) {
  Semiring S(SemiringTag::FinLang, "ab");
  LinSystem sys{S, {}, {}};
  for (const auto& g : gens) {
    Vector v;
    for (const auto& ws : g) v.push_back(S.words(ws));
    sys.generators.push_back(v);
  }
  for (const auto& ws : target) sys.target.push_back(S.words(ws));
  return sys;
}

constexpr long kNegInf = -999;

std::vector<mpq_class> as_rats(const Vector& v) {
  std::vector<mpq_class> out;
  for (const auto& x : v)
    out.push_back(std::holds_alternative<mpz_class>(x.data()) ? mpq_class(x.as_int()) : x.as_rat());
  return out;
}

LinSystem random_system(SemiringTag tag, Rng& rng, std::size_t gens, std::size_t len, WeightRange r) {
  Semiring S(tag, tag == SemiringTag::FinLang ? "ab" : "");
  LinSystem sys{S, {}, {}};
  for (std::size_t p = 0; p < gens; ++p) {
    Vector g;
    for (std::size_t t = 0; t < len; ++t) g.push_back(random_weight(S, rng, r));
    sys.generators.push_back(g);
  }
  return sys;
}

}  // namespace

TEST_CASE("left examples") {
  auto s = solve_left(ints(SemiringTag::NatMax, {{1}}, {2}));
  REQUIRE(s.status == SolveStatus::Solved);
  CHECK(*s.witness == Vector{Semiring(SemiringTag::NatMax).from_int(1)});
  CHECK(solve_left(ints(SemiringTag::NatMax, {{kNegInf}}, {1})).status == SolveStatus::NoSolution);

  Semiring rat(SemiringTag::Rat);
  LinSystem id{rat, {}, {rat.parse("1/2"), rat.parse("-3"), rat.parse("7/5")}};
  for (std::size_t i = 0; i < 3; ++i) {
    Vector e(3, rat.zero());
    e[i] = rat.one();
    id.generators.push_back(e);
  }
  auto r = solve_left(id);
  REQUIRE(r.status == SolveStatus::Solved);
  CHECK(*r.witness == id.target);
}

TEST_CASE("FINLANG left and right differ") {
  Semiring S(SemiringTag::FinLang, "ab");
  auto right = solve_right(langs({{{"a"}}}, {{"ab"}}));
  REQUIRE(right.status == SolveStatus::Solved);
  CHECK(*right.witness == Vector{S.words({"b"})});

  LinSystem ba = langs({{{"a"}}}, {{"ba"}});
  auto left = solve_left(ba);
  REQUIRE(left.status == SolveStatus::Solved);
  CHECK(*left.witness == Vector{S.words({"b"})});
  CHECK(solve_right(ba).status == SolveStatus::NoSolution);
}

TEST_CASE("enumeration examples") {
  Semiring b(SemiringTag::Bool);
  LinSystem bs{b, {{b.boolean(true), b.boolean(false)}, {b.boolean(false), b.boolean(true)}},
               {b.boolean(true), b.boolean(true)}};
  auto e = enumerate_left(bs);
  CHECK(e.solutions == std::vector<Vector>{{b.boolean(true), b.boolean(true)}});

  Semiring nat(SemiringTag::Nat);
  auto n = enumerate_left(ints(SemiringTag::Nat, {{1}, {2}}, {4}));
  std::set<std::pair<long, long>> got;
  for (const auto& v : n.solutions) got.insert({v[0].as_int().get_si(), v[1].as_int().get_si()});
  CHECK(got == std::set<std::pair<long, long>>{{0, 2}, {2, 1}, {4, 0}});

  LinSystem mp = ints(SemiringTag::NatMax, {{0}, {1}}, {1});
  auto m = enumerate_left(mp);
  std::vector<Value> dom = oracle::range_domain(mp.semiring, 0, 3);
  dom.insert(dom.begin(), mp.semiring.neg_inf());
  auto brute = oracle::box_solutions(mp, Side::Left, {dom, dom});
  CHECK(brute.size() == 4);
  CHECK(m.solutions.size() == brute.size());
  for (const auto& v : brute) CHECK(std::find(m.solutions.begin(), m.solutions.end(), v) != m.solutions.end());

  CHECK_THROWS_AS(enumerate_left(ints(SemiringTag::Nat, {{0}, {2}}, {4})), DomainError);
  CHECK_THROWS_AS(enumerate_left(ints(SemiringTag::Rat, {{1}}, {4})), DomainError);
}

TEST_CASE("enumeration cap truncates") {
  auto e = enumerate_left(ints(SemiringTag::Nat, {{1}, {1}}, {9}), 4);
  CHECK(e.truncated);
  CHECK(e.solutions.size() == 4);
}

TEST_CASE("NAT agrees with brute force") {
  Rng rng(2024);
  std::uniform_int_distribution<long> entry(0, 10);
  Semiring nat(SemiringTag::Nat);
  int solved = 0;
  for (int trial = 0; trial < 500; ++trial) {
    LinSystem sys{nat, {}, {}};
    for (int p = 0; p < 3; ++p) {
      Vector g;
      for (int t = 0; t < 3; ++t) g.push_back(nat.from_int(entry(rng) < 4 ? 0 : entry(rng)));
      sys.generators.push_back(g);
    }
    // half the targets are reachable by construction
    if (trial % 2 == 0) {
      Vector c;
      for (int p = 0; p < 3; ++p) c.push_back(nat.from_int(entry(rng) % 3));
      sys.target.assign(3, nat.zero());
      sys.target = combine(sys, c, Side::Left);
    } else {
      for (int t = 0; t < 3; ++t) sys.target.push_back(nat.from_int(entry(rng)));
    }
    auto out = solve_left(sys);
    const bool brute = !oracle::box_solutions(sys, Side::Left, oracle::complete_domains(sys), 1).empty();
    REQUIRE(out.status != SolveStatus::BoundExceeded);
    CHECK((out.status == SolveStatus::Solved) == brute);
    if (out.witness) CHECK(is_solution(sys, *out.witness, Side::Left));
    solved += brute;
  }
  CHECK(solved >= 250);
}

TEST_CASE("RAT agrees with the rank test") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    LinSystem sys = random_system(SemiringTag::Rat, rng, 1 + trial % 4, 3, {-3, 3, 3, 0.4});
    for (int t = 0; t < 3; ++t) sys.target.push_back(random_weight(sys.semiring, rng, {-3, 3, 3, 0.2}));
    std::vector<std::vector<mpq_class>> g;
    for (const auto& v : sys.generators) g.push_back(as_rats(v));
    auto out = solve_left(sys);
    CHECK((out.status == SolveStatus::Solved) == oracle::rat_solvable(g, as_rats(sys.target)));
    if (out.witness) CHECK(is_solution(sys, *out.witness, Side::Left));
  }
}

TEST_CASE("NONNEG_RAT agrees with Fourier-Motzkin") {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    LinSystem sys = random_system(SemiringTag::NonnegRat, rng, 1 + trial % 4, 3, {0, 4, 3, 0.4});
    for (int t = 0; t < 3; ++t) sys.target.push_back(random_weight(sys.semiring, rng, {0, 6, 2, 0.2}));
    std::vector<std::vector<mpq_class>> g;
    for (const auto& v : sys.generators) g.push_back(as_rats(v));
    auto out = solve_left(sys);
    CHECK((out.status == SolveStatus::Solved) == oracle::fm_feasible(g, as_rats(sys.target)));
    if (out.witness) CHECK(is_solution(sys, *out.witness, Side::Left));
  }
}

TEST_CASE("INT agrees with a box search") {
  Rng rng(7);
  Semiring S(SemiringTag::Int);
  for (int trial = 0; trial < 150; ++trial) {
    LinSystem sys = random_system(SemiringTag::Int, rng, 2, 2, {-3, 3, 1, 0.2});
    for (int t = 0; t < 2; ++t) sys.target.push_back(random_weight(S, rng, {-6, 6, 1, 0.1}));
    auto out = solve_left(sys);
    if (out.witness) CHECK(is_solution(sys, *out.witness, Side::Left));
    // with a nonsingular 2x2 matrix every solution is unique and small enough to box
    std::vector<std::vector<mpq_class>> g{as_rats(sys.generators[0]), as_rats(sys.generators[1])};
    if (oracle::rank(g) == 2) {
      auto box = oracle::box_solutions(sys, Side::Left,
                                       {oracle::range_domain(S, -40, 40), oracle::range_domain(S, -40, 40)}, 1);
      CHECK((out.status == SolveStatus::Solved) == !box.empty());
    } else if (out.status == SolveStatus::NoSolution) {
      auto box = oracle::box_solutions(sys, Side::Left,
                                       {oracle::range_domain(S, -8, 8), oracle::range_domain(S, -8, 8)}, 1);
      CHECK(box.empty());
    }
  }
}

TEST_CASE("BOOL and max-plus return the greatest solution") {
  Rng rng(8);
  for (SemiringTag tag : {SemiringTag::Bool, SemiringTag::NatMax, SemiringTag::IntMax}) {
    for (int trial = 0; trial < 150; ++trial) {
      LinSystem sys = random_system(tag, rng, 2, 3, {0, 3, 1, 0.3});
      for (int t = 0; t < 3; ++t) sys.target.push_back(random_weight(sys.semiring, rng, {0, 4, 1, 0.2}));
      auto out = solve_left(sys);
      auto all = oracle::box_solutions(sys, Side::Left, oracle::complete_domains(sys));
      CHECK((out.status == SolveStatus::Solved) == !all.empty());
      if (!out.witness) continue;
      CHECK(is_solution(sys, *out.witness, Side::Left));
      for (const auto& x : all)
        for (std::size_t p = 0; p < x.size(); ++p) CHECK(oracle::leq(x[p], (*out.witness)[p]));
    }
  }
}

TEST_CASE("FINLANG agrees with brute force on both sides") {
  Rng rng(9);
  Semiring S(SemiringTag::FinLang, "ab");
  for (int trial = 0; trial < 150; ++trial) {
    LinSystem sys = random_system(SemiringTag::FinLang, rng, 2, 2, {0, 1, 1, 0.3});
    if (trial % 2 == 0) {
      Vector c{random_value(S, rng), random_value(S, rng)};
      sys.target.assign(2, S.zero());
      sys.target = combine(sys, c, Side::Left);
    } else {
      sys.target = {random_value(S, rng), random_value(S, rng)};
    }
    bool has_zero = false;
    for (const auto& g : sys.generators) has_zero |= is_zero_vector(S, g);
    if (has_zero) continue;
    auto out = solve_left(sys);
    const bool brute = !oracle::box_solutions(sys, Side::Left, oracle::complete_domains(sys), 1).empty();
    CHECK((out.status == SolveStatus::Solved) == brute);
    if (out.witness) CHECK(is_solution(sys, *out.witness, Side::Left));
    auto r = solve_right(sys);
    if (r.witness) CHECK(is_solution(sys, *r.witness, Side::Right));
  }
}

TEST_CASE("solvability is monotone in the generators") {
  Rng rng(10);
  for (SemiringTag tag : {SemiringTag::Nat, SemiringTag::NatMax, SemiringTag::Rat, SemiringTag::Bool}) {
    for (int trial = 0; trial < 60; ++trial) {
      LinSystem sys = random_system(tag, rng, 2, 3, {0, 3, 1, 0.3});
      Vector c{random_weight(sys.semiring, rng, {0, 2, 1, 0.3}), random_weight(sys.semiring, rng, {0, 2, 1, 0.3})};
      sys.target.assign(3, sys.semiring.zero());
      sys.target = combine(sys, c, Side::Left);
      REQUIRE(solve_left(sys).status == SolveStatus::Solved);
      LinSystem more = sys;
      Vector extra;
      for (int t = 0; t < 3; ++t) extra.push_back(random_weight(sys.semiring, rng, {0, 3, 1, 0.3}));
      more.generators.push_back(extra);
      CHECK(solve_left(more).status == SolveStatus::Solved);
    }
  }
}

TEST_CASE("NAT node cap gives BOUND_EXCEEDED") {
  // the first row has an even left side and an odd target, but the LP relaxation is feasible
  Semiring nat(SemiringTag::Nat);
  LinSystem sys = ints(SemiringTag::Nat, {{2, 3}, {4, 6}, {6, 1}}, {7, 5});
  SolverLimits tiny;
  tiny.node_cap = 1;
  auto out = solve_left(sys, tiny);
  auto full = solve_left(sys);
  CHECK(full.status != SolveStatus::BoundExceeded);
  if (full.status == SolveStatus::NoSolution) CHECK(out.status == SolveStatus::BoundExceeded);
}

TEST_CASE("witness and combine shapes") {
  LinSystem sys = ints(SemiringTag::Nat, {{1, 2}}, {1});
  CHECK_THROWS(solve_left(sys));
}
