#include <doctest.h>

#include <set>

#include "wal/classify.hpp"
#include "wal/learner.hpp"
#include "wal/random_gen.hpp"
#include "wal/words.hpp"

using namespace wal;

namespace {

Teacher teacher(const Fixture& fx, TeacherMode mode, std::size_t depth = 6) {
  return Teacher{fx.oracle(), {EquivalenceChecker::Kind::Bounded, depth}, mode, 6, fx.automaton, {}};
}

std::vector<Word> mentioned_words(const GameTranscript& tr) {
  std::vector<Word> out;
  for (const auto& e : tr.events) {
    if (e["event"] == "Counterexample") out.push_back(e["word"].get<std::string>());
    if (e["event"] == "PairQueried")
      for (const auto& q : e["rows"])
        for (const auto& t : e["columns"]) out.push_back(q.get<std::string>() + t.get<std::string>());
  }
  return out;
}

void check_soundness(const LearnResult& r, const MembershipOracle& o, std::size_t depth) {
  REQUIRE(r.automaton);
  for (const auto& w : mentioned_words(r.transcript)) CHECK(evaluate(*r.automaton, w) == o.query(w));
  for (const auto& w : words_up_to("ab", depth)) CHECK(evaluate(*r.automaton, w) == o.query(w));
}

}  // namespace

TEST_CASE("the two-state f3 hypothesis first errs on ba") {
  Fixture fx = fixture("f3");
  Teacher t = teacher(fx, TeacherMode::Ally);
  auto h = solve_lambda(t.oracle, {"", "a"}, {""});
  REQUIRE(h.solution);
  Wfa H = build_hypothesis(*h.solution);
  CHECK(evaluate(H, "b") == fx.semiring.from_int(1));
  auto r = equivalence_query(t, H);
  CHECK_FALSE(r.equal);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == "ba");
  CHECK(r.verdict == "bounded(6)");
  CHECK(first_disagreement(H, t.oracle, 6) == Word("ba"));
  CHECK(equivalence_query(t, *fx.automaton).equal);
}

TEST_CASE("exact equivalence sees through a state permutation") {
  Rng rng(12);
  Semiring rat(SemiringTag::Rat);
  for (int i = 0; i < 10; ++i) {
    Wfa A = random_wfa(rat, "ab", 3, rng, {-3, 3, 3, 0.3});
    Wfa P(rat, "ab", {"x", "y", "z"});
    const std::size_t perm[3] = {2, 0, 1};
    for (std::size_t q = 0; q < 3; ++q) {
      P.initial[perm[q]] = A.initial[q];
      P.final[perm[q]] = A.final[q];
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t p = 0; p < 3; ++p) P.transitions[a][perm[q]][perm[p]] = A.transitions[a][q][p];
    }
    Teacher t{MembershipOracle::from_wfa(A), {EquivalenceChecker::Kind::FieldExact, 0}, TeacherMode::Ally, 4, A, {}};
    auto r = equivalence_query(t, P);
    CHECK(r.equal);
    CHECK(r.verdict == "exact");
    // a perturbed copy is told apart
    Wfa Q = P;
    Q.final[0] = rat.add(Q.final[0], rat.one());
    if (!(evaluate(Q, "") == evaluate(A, "")) || first_disagreement(Q, t.oracle, 6))
      CHECK_FALSE(equivalence_query(t, Q).equal);
  }
}

TEST_CASE("adversary and ally choices on the two-state block") {
  Fixture fx = fixture("f3");
  auto adv = choose_lambda(teacher(fx, TeacherMode::Adversary), {"", "a"}, {""});
  REQUIRE(adv.lambda);
  Wfa H = build_hypothesis(*adv.lambda);
  CHECK(first_disagreement(H, fx.oracle(), 6));

  auto ally = choose_lambda(teacher(fx, TeacherMode::Ally), {"", "a", "b"}, {"", "a", "b"});
  REQUIRE(ally.lambda);
  CHECK_FALSE(first_disagreement(build_hypothesis(*ally.lambda), fx.oracle(), 6));

  auto none = choose_lambda(teacher(fx, TeacherMode::Ally), {""}, {"", "a"});
  CHECK_FALSE(none.lambda);
  REQUIRE(none.failing);
}

TEST_CASE("hkrs learns f3 with an ally") {
  Fixture fx = fixture("f3");
  LearnResult r = run_hkrs(teacher(fx, TeacherMode::Ally), 100);
  REQUIRE(r.outcome == LearnOutcome::Success);
  CHECK(r.transcript.interactions() <= 10);
  check_soundness(r, fx.oracle(), 10);
}

TEST_CASE("hkrs on f'1 runs out of budget") {
  Fixture fx = fixture("f'1");
  LearnResult r = run_hkrs(teacher(fx, TeacherMode::Ally), 40);
  CHECK(r.outcome == LearnOutcome::BudgetExhausted);
  CHECK(r.transcript.interactions() <= 40);
  CHECK(r.transcript.events.back()["event"] == "BudgetExhausted");
}

TEST_CASE("hkrs only grows its row and column sets") {
  Fixture fx = fixture("f'1");
  LearnResult r = run_hkrs(teacher(fx, TeacherMode::Adversary), 40);
  std::set<Word> Q, T;
  std::string last_failing;
  for (const auto& e : r.transcript.events) {
    if (e["event"] != "PairQueried") continue;
    std::set<Word> q2, t2;
    for (const auto& w : e["rows"]) q2.insert(w.get<std::string>());
    for (const auto& w : e["columns"]) t2.insert(w.get<std::string>());
    CHECK(std::includes(q2.begin(), q2.end(), Q.begin(), Q.end()));
    CHECK(std::includes(t2.begin(), t2.end(), T.begin(), T.end()));
    CHECK(q2.count(""));
    CHECK(t2.count(""));
    Q = q2;
    T = t2;
  }
  CHECK(Q.size() > 3);
}

TEST_CASE("counterexamples are real disagreements") {
  for (const char* name : {"f3", "f'3", "f5"}) {
    Fixture fx = fixture(name);
    MembershipOracle o = fx.oracle();
    LearnResult r = run_incremental(teacher(fx, TeacherMode::Adversary), 200);
    const Wfa* last = nullptr;
    std::optional<Wfa> H;
    for (const auto& e : r.transcript.events) {
      if (e["event"] == "HypothesisIssued") {
        H = wfa_from_json(e["automaton"]);
        last = &*H;
      }
      if (e["event"] == "Counterexample") {
        REQUIRE(last);
        const Word z = e["word"].get<std::string>();
        CHECK_FALSE(evaluate(*last, z) == o.query(z));
      }
    }
    CAPTURE(name);
    CHECK(r.outcome == LearnOutcome::Success);
    if (r.automaton) check_soundness(r, o, 6);
  }
}

TEST_CASE("constant functions are learned at once") {
  Fixture fx = fixture("f4");
  LearnResult inc = run_incremental(teacher(fx, TeacherMode::Adversary), 10);
  REQUIRE(inc.outcome == LearnOutcome::Success);
  CHECK(inc.transcript.solver_calls == 1);
  CHECK(inc.transcript.equivalence_queries == 1);
  LearnResult en = run_enumeration(teacher(fx, TeacherMode::Adversary), 10);
  REQUIRE(en.outcome == LearnOutcome::Success);
  CHECK(en.transcript.events.front()["rows"] == Json::array({""}));
  CHECK(en.transcript.events.front()["columns"] == Json::array({""}));
}

TEST_CASE("indexed word sets") {
  CHECK(indexed_word_set("ab", 1) == std::vector<Word>{""});
  CHECK(indexed_word_set("ab", 2) == std::vector<Word>{"a"});
  CHECK(indexed_word_set("ab", 3) == std::vector<Word>{"", "a"});
  CHECK(indexed_word_set("ab", 6) == std::vector<Word>{"a", "b"});
  std::set<std::vector<Word>> seen;
  for (std::size_t i = 1; i < 200; ++i) CHECK(seen.insert(indexed_word_set("ab", i)).second);
}

TEST_CASE("transcripts are deterministic") {
  for (const char* name : {"f3", "f2"}) {
    auto once = [&] {
      return run_incremental(teacher(fixture(name), TeacherMode::Adversary), 60).transcript.to_jsonl();
    };
    CHECK(once() == once());
  }
  auto h = [] { return run_hkrs(teacher(fixture("f'1"), TeacherMode::Ally), 30).transcript.to_jsonl(); };
  CHECK(h() == h());
}

TEST_CASE("transcript lines are JSON events") {
  LearnResult r = run_hkrs(teacher(fixture("f3"), TeacherMode::Ally), 100);
  std::istringstream in(r.transcript.to_jsonl());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    Json e = Json::parse(line);
    CHECK(e.contains("event"));
    ++n;
  }
  CHECK(n == r.transcript.events.size());
  CHECK(std::string(outcome_name(r.outcome)) == "SUCCESS");
}
