#include <doctest.h>

#include "wal/random_gen.hpp"
#include "wal/semiring.hpp"
#include "wal/words.hpp"

using namespace wal;

namespace {

const SemiringTag kTags[] = {SemiringTag::Bool,   SemiringTag::Nat,    SemiringTag::Int,
                             SemiringTag::Rat,    SemiringTag::NonnegRat, SemiringTag::NatMax,
                             SemiringTag::IntMax, SemiringTag::RatMax, SemiringTag::FinLang};

Semiring make(SemiringTag t) { return Semiring(t, t == SemiringTag::FinLang ? "ab" : ""); }

}  // namespace

TEST_CASE("addition examples") {
  Semiring nmax(SemiringTag::NatMax), lang(SemiringTag::FinLang, "ab"), rat(SemiringTag::Rat);
  CHECK(nmax.add(nmax.from_int(3), nmax.neg_inf()) == nmax.from_int(3));
  CHECK(lang.add(lang.words({"a"}), lang.words({"b"})) == lang.words({"a", "b"}));
  CHECK(rat.add(rat.parse("1/2"), rat.parse("1/3")) == rat.parse("5/6"));
}

TEST_CASE("multiplication examples") {
  Semiring imax(SemiringTag::IntMax), lang(SemiringTag::FinLang, "ab");
  CHECK(imax.mul(imax.from_int(2), imax.from_int(3)) == imax.from_int(5));
  CHECK(lang.mul(lang.words({"a"}), lang.words({"b", ""})) == lang.words({"ab", "a"}));
  // words on the left come first
  CHECK(lang.mul(lang.words({"b"}), lang.words({"a"})) == lang.words({"ba"}));
  for (SemiringTag t : kTags) {
    Semiring S = make(t);
    Rng rng(static_cast<unsigned>(t));
    for (int i = 0; i < 20; ++i) {
      Value x = random_value(S, rng);
      CHECK(S.mul(S.zero(), x) == S.zero());
    }
  }
}

TEST_CASE("commutativity flag") {
  for (SemiringTag t : kTags) CHECK(make(t).commutative() == (t != SemiringTag::FinLang));
}

TEST_CASE("domain mismatch is rejected") {
  Semiring nat(SemiringTag::Nat), imax(SemiringTag::IntMax);
  CHECK_THROWS_AS(nat.add(nat.one(), imax.one()), DomainError);
  CHECK_THROWS_AS(imax.mul(nat.one(), imax.one()), DomainError);
  Semiring ab(SemiringTag::FinLang, "ab"), abc(SemiringTag::FinLang, "abc");
  CHECK_THROWS_AS(ab.words({"c"}), DomainError);
  CHECK_NOTHROW(abc.words({"c"}));
}

TEST_CASE("carriers are validated") {
  Semiring nat(SemiringTag::Nat), nnr(SemiringTag::NonnegRat), nmax(SemiringTag::NatMax),
      imax(SemiringTag::IntMax);
  CHECK_THROWS_AS(nat.from_int(-1), DomainError);
  CHECK_THROWS_AS(nnr.from_rat(mpq_class(-1, 2)), DomainError);
  CHECK_THROWS_AS(nmax.from_int(-2), DomainError);
  CHECK_THROWS_AS(imax.from_rat(mpq_class(1, 2)), DomainError);
  Semiring rat(SemiringTag::Rat);
  Value q = rat.parse("-4/6");
  CHECK(q.as_rat().get_num() == -2);
  CHECK(q.as_rat().get_den() == 3);
}

TEST_CASE("parse and render round trip") {
  for (SemiringTag t : kTags) {
    Semiring S = make(t);
    Rng rng(100 + static_cast<unsigned>(t));
    for (int i = 0; i < 200; ++i) {
      Value x = random_value(S, rng);
      CHECK(S.parse(S.render(x)) == x);
    }
  }
  Semiring rat(SemiringTag::Rat);
  CHECK(rat.render(rat.parse("6/4")) == "3/2");
  CHECK(rat.render(rat.parse("-4/2")) == "-2");
  Semiring lang(SemiringTag::FinLang, "ab");
  CHECK(lang.render(lang.parse("{ba,eps,a,ba}")) == "{eps,a,ba}");
  CHECK(lang.render(lang.parse("{}")) == "{}");
  Semiring nmax(SemiringTag::NatMax);
  CHECK(nmax.render(nmax.zero()) == "-inf");
  CHECK(nmax.render(nmax.one()) == "0");
}

TEST_CASE("parse errors carry positions") {
  Semiring nat(SemiringTag::Nat), rat(SemiringTag::Rat), lang(SemiringTag::FinLang, "ab");
  auto position = [](auto&& f) -> long {
    try {
      f();
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position([&] { nat.parse("12x"); }) == 2);
  CHECK(position([&] { rat.parse("1/0"); }) == 2);
  CHECK(position([&] { rat.parse("1/-3"); }) == 2);
  CHECK(position([&] { lang.parse("{a,c}"); }) == 3);
  CHECK(position([&] { lang.parse("{a,,b}"); }) == 3);
  CHECK(position([&] { lang.parse("a}"); }) == 0);
  CHECK_THROWS_AS(nat.parse("-1"), ParseError);
  CHECK_THROWS_AS(Semiring(SemiringTag::Bool).parse("2"), ParseError);
}

TEST_CASE("finite languages are canonical") {
  Semiring lang(SemiringTag::FinLang, "ab");
  Value x = lang.words({"b", "a", "", "ab", "a"});
  CHECK(x.as_words() == std::vector<Word>{"", "a", "b", "ab"});
  CHECK(lang.is_zero(lang.words({})));
  CHECK(lang.is_one(lang.words({""})));
}

TEST_CASE("semiring axioms on random triples") {
  for (SemiringTag t : kTags) {
    Semiring S = make(t);
    Rng rng(7 + static_cast<unsigned>(t));
    CAPTURE(S.name());
    for (int i = 0; i < 300; ++i) {
      Value x = random_value(S, rng), y = random_value(S, rng), z = random_value(S, rng);
      CHECK(S.add(S.add(x, y), z) == S.add(x, S.add(y, z)));
      CHECK(S.mul(S.mul(x, y), z) == S.mul(x, S.mul(y, z)));
      CHECK(S.add(x, y) == S.add(y, x));
      if (S.commutative()) CHECK(S.mul(x, y) == S.mul(y, x));
      CHECK(S.mul(x, S.add(y, z)) == S.add(S.mul(x, y), S.mul(x, z)));
      CHECK(S.mul(S.add(x, y), z) == S.add(S.mul(x, z), S.mul(y, z)));
      CHECK(S.add(x, S.zero()) == x);
      CHECK(S.mul(S.one(), x) == x);
      CHECK(S.mul(x, S.one()) == x);
      CHECK(S.mul(x, S.zero()) == S.zero());
    }
  }
}

TEST_CASE("FINLANG multiplication is not commutative") {
  Semiring lang(SemiringTag::FinLang, "ab");
  CHECK_FALSE(lang.mul(lang.words({"a"}), lang.words({"b"})) ==
              lang.mul(lang.words({"b"}), lang.words({"a"})));
}

TEST_CASE("tags round trip through names") {
  for (SemiringTag t : kTags) CHECK(parse_tag(tag_name(t)) == t);
  CHECK_THROWS_AS(parse_tag("REAL"), DomainError);
}

TEST_CASE("word utilities") {
  CHECK(words_up_to("ba", 2) == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(words_up_to("ab", 8).size() == 511);
  CHECK(suffixes("aab") == std::vector<Word>{"", "b", "ab", "aab"});
  CHECK(prefix_closure({"ab", "b"}) == std::vector<Word>{"", "a", "b", "ab"});
  CHECK(parse_word_list("ab,,b,eps") == std::vector<Word>{"", "b", "ab"});
  CHECK(reversed("aab") == "baa");
  CHECK(shortlex_less("b", "aa"));
  CHECK_FALSE(shortlex_less("ab", "aa"));
  CHECK(render_word("") == "eps");
}
