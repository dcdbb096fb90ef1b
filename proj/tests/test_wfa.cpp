#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "wal/classify.hpp"
#include "wal/random_gen.hpp"
#include "wal/words.hpp"
#include "wal/wfa_io.hpp"

using namespace wal;

namespace {

Semiring make(SemiringTag t) { return Semiring(t, t == SemiringTag::FinLang ? "ab" : ""); }

const SemiringTag kCommutative[] = {SemiringTag::Bool, SemiringTag::Nat, SemiringTag::Int,
                                    SemiringTag::Rat, SemiringTag::NonnegRat, SemiringTag::NatMax,
                                    SemiringTag::IntMax, SemiringTag::RatMax};

WeightRange range_for(SemiringTag t) { return {-3, 3, t == SemiringTag::Rat ? 3 : 1, 0.4}; }

}  // namespace

TEST_CASE("fixture evaluations") {
  Fixture f1p = fixture("f'1"), f3 = fixture("f3"), f1 = fixture("f1");
  CHECK(evaluate(*f1p.automaton, "aaa") == f1p.semiring.from_int(7));
  CHECK(evaluate(*f3.automaton, "") == f3.semiring.neg_inf());
  CHECK(evaluate(*f1.automaton, "baab") == f1.semiring.from_int(2));
  CHECK(evaluate(*f3.automaton, "aab") == f3.semiring.from_int(2));
}

TEST_CASE("a state with initial weight one on the empty word") {
  Semiring nat(SemiringTag::Nat);
  Wfa A(nat, "ab", {"q"});
  A.initial[0] = nat.one();
  A.final[0] = nat.one();
  CHECK(evaluate(A, "") == nat.one());
}

TEST_CASE("evaluation agrees with run enumeration") {
  for (SemiringTag t : {SemiringTag::Nat, SemiringTag::Int, SemiringTag::Rat, SemiringTag::NatMax,
                        SemiringTag::IntMax, SemiringTag::Bool, SemiringTag::FinLang}) {
    Semiring S = make(t);
    Rng rng(31 + static_cast<unsigned>(t));
    for (int i = 0; i < 15; ++i) {
      Wfa A = random_wfa(S, "ab", 1 + i % 3, rng, range_for(t));
      for (const auto& w : words_up_to("ab", 4)) CHECK(evaluate(A, w) == oracle::run_sum(A, w));
    }
  }
  Fixture f3 = fixture("f3");
  for (const auto& w : words_up_to("ab", 4))
    CHECK(evaluate(*f3.automaton, w) == oracle::run_sum(*f3.automaton, w));
}

TEST_CASE("evaluation factorizes through any cut") {
  for (SemiringTag t : {SemiringTag::Nat, SemiringTag::Rat, SemiringTag::IntMax, SemiringTag::FinLang}) {
    Semiring S = make(t);
    Rng rng(41 + static_cast<unsigned>(t));
    Wfa A = random_wfa(S, "ab", 3, rng, range_for(t));
    for (const auto& w : words_up_to("ab", 6))
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        const Word u = w.substr(0, cut), v = w.substr(cut);
        Vector left = forward(A, u);
        Vector right;
        for (const auto& q : A.states) right.push_back(state_row_function(A, q, v));
        CHECK(S.dot(left, right) == evaluate(A, w));
      }
  }
}

TEST_CASE("state functions sum to the automaton") {
  Fixture f3 = fixture("f3");
  const Wfa& A = *f3.automaton;
  const Semiring& S = A.semiring;
  for (const auto& w : words_up_to("ab", 5)) {
    Value sum = S.zero();
    for (std::size_t q = 0; q < A.size(); ++q)
      sum = S.add(sum, S.mul(state_column_function(A, A.states[q], w), A.final[q]));
    CHECK(sum == evaluate(A, w));
  }
  // the a-counting state on "aa"
  CHECK(state_row_function(A, "A", "aa") == S.from_int(2));
}

TEST_CASE("mirror examples") {
  Fixture f3 = fixture("f3");
  CHECK(evaluate(mirror(*f3.automaton), "abb") == evaluate(*f3.automaton, "bba"));
  Wfa id = word_identity_automaton("ab");
  Semiring S = id.semiring;
  CHECK(evaluate(mirror(id), "ab") == S.words({"ab"}));
  CHECK(evaluate(id, "ba") == S.words({"ba"}));
  CHECK(mirror(mirror(*f3.automaton)) == *f3.automaton);
}

TEST_CASE("mirror reverses words over commutative semirings") {
  for (SemiringTag t : kCommutative) {
    Semiring S = make(t);
    Rng rng(51 + static_cast<unsigned>(t));
    for (int i = 0; i < 5; ++i) {
      Wfa A = random_wfa(S, "ab", 3, rng, range_for(t));
      Wfa M = mirror(A);
      for (const auto& w : words_up_to("ab", 6)) CHECK(evaluate(M, w) == evaluate(A, reversed(w)));
    }
  }
}

TEST_CASE("literal certificates") {
  Fixture f4 = fixture("f4");
  auto cert = is_literal(*f4.automaton);
  REQUIRE(cert);
  CHECK(cert->labels == std::vector<Word>{""});
  // f3's automaton enters its counting states with weight 1, so it is not literal
  CHECK_FALSE(is_literal(*fixture("f3").automaton));
}

TEST_CASE("unknown letters and states are domain errors") {
  Fixture f3 = fixture("f3");
  CHECK_THROWS_AS(evaluate(*f3.automaton, "abc"), DomainError);
  Wfa A = *f3.automaton;
  CHECK_THROWS_AS(A.at("Z", 'a', "A"), DomainError);
}

TEST_CASE("JSON file format round trip") {
  for (const auto& fx : fixtures()) {
    Json j = wfa_to_json(*fx.automaton);
    CHECK(wfa_from_json(j) == *fx.automaton);
  }
  const auto path = std::filesystem::temp_directory_path() / "wal_test_f3.json";
  save_wfa(*fixture("f3").automaton, path.string());
  CHECK(load_wfa(path.string()) == *fixture("f3").automaton);
  std::filesystem::remove(path);
}

TEST_CASE("JSON input details") {
  Json j = Json::parse(R"({"semiring":"NAT","alphabet":["a","b"],"states":["p"],
    "initial":{"p":"1"},"final":{"p":"1"},
    "transitions":[{"from":"p","letter":"a","to":"p","weight":"1"},
                   {"from":"p","letter":"a","to":"p","weight":"2"}]})");
  Wfa A = wfa_from_json(j);
  // omitted transitions are zero, repeated ones add up
  CHECK(evaluate(A, "a") == A.semiring.from_int(3));
  CHECK(evaluate(A, "b") == A.semiring.zero());

  Json bad = j;
  bad["transitions"][0]["weight"] = "-1";
  CHECK_THROWS_AS(wfa_from_json(bad), DomainError);
  bad = j;
  bad["transitions"][0]["to"] = "nowhere";
  CHECK_THROWS_AS(wfa_from_json(bad), DomainError);
  bad = j;
  bad.erase("states");
  CHECK_THROWS_AS(wfa_from_json(bad), DomainError);
  bad = j;
  bad["semiring"] = "REAL";
  CHECK_THROWS_AS(wfa_from_json(bad), DomainError);

  Json lang = Json::parse(R"({"semiring":"FINLANG","alphabet":["a","b"],"states":["q"],
    "initial":{"q":"{eps}"},"final":{"q":"{eps}"},
    "transitions":[{"from":"q","letter":"a","to":"q","weight":"{a}"}]})");
  Wfa L = wfa_from_json(lang);
  CHECK(evaluate(L, "aa") == L.semiring.words({"aa"}));
}
