#include <algorithm>

#include "wal/classify.hpp"
#include "wal/words.hpp"

namespace wal {

namespace {

std::size_t count(const Word& w, char c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

std::size_t longest_block(const Word& w, char c) {
  std::size_t best = 0, run = 0;
  for (char x : w) {
    run = x == c ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

mpz_class pow2(std::size_t n) {
  mpz_class r = 1;
  r <<= n;
  return r;
}

Value num(const Semiring& S, const mpz_class& n) { return S.from_int(n); }
Value num(const Semiring& S, std::size_t n) { return S.from_int(mpz_class(static_cast<unsigned long>(n))); }

ExpectedFlags strongly_guessable_only() {
  ExpectedFlags f;
  f.weakly_guessable = f.guessable = f.strongly_guessable = true;
  return f;
}

ExpectedFlags mirrored(ExpectedFlags f) {
  return {f.weakly_coguessable, f.coguessable, f.strongly_coguessable,
          f.weakly_guessable,   f.guessable,   f.strongly_guessable};
}

// Longest a-block over a max-plus semiring.
Fixture make_f1(const Semiring& S) {
  Wfa A(S, "ab", {"L", "B", "R"});
  const Value zero = num(S, 0u), one = num(S, 1u);
  A.initial[0] = zero;
  A.final = {zero, zero, zero};
  A.at("L", 'a', "L") = zero;
  A.at("L", 'b', "L") = zero;
  A.at("L", 'a', "B") = one;
  A.at("B", 'a', "B") = one;
  A.at("B", 'b', "R") = zero;
  A.at("R", 'a', "R") = zero;
  A.at("R", 'b', "R") = zero;
  return {"f1", "f1", S, [S](const Word& w) { return num(S, longest_block(w, 'a')); }, A, {}};
}

// 2^n - 1 on a^n, 0 elsewhere.
Fixture make_f1p(const Semiring& S) {
  Wfa A(S, "ab", {"p", "q"});
  A.initial[0] = S.one();
  A.final[1] = S.one();
  A.at("p", 'a', "p") = S.one();
  A.at("p", 'a', "q") = S.one();
  A.at("q", 'a', "q") = num(S, 2u);
  auto f = [S](const Word& w) {
    if (count(w, 'b') > 0) return S.zero();
    return num(S, mpz_class(pow2(w.size()) - 1));
  };
  return {"f1p", "f'1", S, f, A, {}};
}

Fixture make_f1pp() {
  Semiring S(SemiringTag::FinLang, "ab");
  Wfa A(S, "ab", {"p", "q"});
  Value eps = S.one();
  A.initial = {eps, eps};
  A.final = {eps, eps};
  A.at("p", 'a', "p") = S.words({"a"});
  A.at("p", 'b', "p") = eps;
  A.at("q", 'a', "q") = eps;
  A.at("q", 'b', "q") = S.words({"b"});
  auto f = [S](const Word& w) {
    return S.words({std::string(count(w, 'a'), 'a'), std::string(count(w, 'b'), 'b')});
  };
  return {"f1pp", "f''1", S, f, A, {}};
}

// |w|_x for the first letter x, -inf on the empty word.
Fixture make_f3_shape(const Semiring& S, const std::string& name) {
  Wfa A(S, "ab", {"e", "A", "B"});
  const Value zero = num(S, 0u), one = num(S, 1u);
  A.initial[0] = zero;
  A.final[1] = zero;
  A.final[2] = zero;
  A.at("e", 'a', "A") = one;
  A.at("e", 'b', "B") = one;
  A.at("A", 'a', "A") = one;
  A.at("A", 'b', "A") = zero;
  A.at("B", 'a', "B") = zero;
  A.at("B", 'b', "B") = one;
  auto f = [S](const Word& w) { return w.empty() ? S.zero() : num(S, count(w, w[0])); };
  ExpectedFlags flags = strongly_guessable_only();
  if (name == "f2") flags.guessable = flags.strongly_guessable = false;
  return {name, name, S, f, A, flags};
}

// 2^{|w|_x}, or with b-weights replaced by 1 for f5.
Fixture make_f3p_shape(const Semiring& S, bool f5) {
  Wfa A(S, "ab", {"e", "A", "B"});
  const Value one = S.one(), two = num(S, 2u);
  A.initial[0] = one;
  A.final[1] = one;
  A.final[2] = one;
  A.at("e", 'a', "A") = two;
  A.at("e", 'b', "B") = f5 ? one : two;
  A.at("A", 'a', "A") = two;
  A.at("A", 'b', "A") = one;
  A.at("B", 'a', "B") = one;
  A.at("B", 'b', "B") = f5 ? one : two;
  std::function<Value(const Word&)> f;
  if (f5)
    f = [S](const Word& w) {
      if (w.empty()) return S.zero();
      return w[0] == 'a' ? num(S, pow2(count(w, 'a'))) : S.one();
    };
  else
    f = [S](const Word& w) { return w.empty() ? S.zero() : num(S, pow2(count(w, w[0]))); };
  return {f5 ? "f5" : "f3p", f5 ? "f5" : "f'3", S, f, A, strongly_guessable_only()};
}

Fixture make_f3pp() {
  Semiring S(SemiringTag::FinLang, "ab");
  Wfa A(S, "ab", {"e", "A", "B"});
  const Value eps = S.one();
  A.initial[0] = eps;
  A.final[1] = eps;
  A.final[2] = eps;
  A.at("e", 'a', "A") = S.words({"a"});
  A.at("e", 'b', "B") = S.words({"b"});
  A.at("A", 'a', "A") = S.words({"a"});
  A.at("A", 'b', "A") = eps;
  A.at("B", 'a', "B") = eps;
  A.at("B", 'b', "B") = S.words({"b"});
  auto f = [S](const Word& w) {
    if (w.empty()) return S.zero();
    return S.words({std::string(count(w, w[0]), w[0])});
  };
  return {"f3pp", "f''3", S, f, A, strongly_guessable_only()};
}

Fixture make_f4(const Semiring& S) {
  Wfa A(S, "ab", {"q"});
  A.initial[0] = A.final[0] = S.one();
  A.at("q", 'a', "q") = S.one();
  A.at("q", 'b', "q") = S.one();
  ExpectedFlags all{true, true, true, true, true, true};
  return {"f4", "f4", S, [S](const Word&) { return S.one(); }, A, all};
}

Fixture mirror_fixture(const Fixture& fx) {
  Fixture m = fx;
  m.name = fx.name + "bar";
  m.display = fx.display + "bar";
  auto f = fx.closed_form;
  m.closed_form = [f](const Word& w) { return f(reversed(w)); };
  if (fx.automaton) m.automaton = mirror(*fx.automaton);
  m.expected = mirrored(fx.expected);
  return m;
}

std::string canonical_name(std::string n) {
  // f'1 -> f1p, f''3 -> f3pp
  std::size_t primes = static_cast<std::size_t>(std::count(n.begin(), n.end(), '\''));
  if (primes == 0) return n;
  n.erase(std::remove(n.begin(), n.end(), '\''), n.end());
  std::string suffix;
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "bar") == 0) {
    suffix = "bar";
    n.resize(n.size() - 3);
  }
  return n + std::string(primes, 'p') + suffix;
}

}  // namespace

MembershipOracle Fixture::oracle() const {
  return MembershipOracle(semiring, "ab", closed_form, display);
}

std::vector<Fixture> fixtures() {
  Semiring nat(SemiringTag::Nat), natmax(SemiringTag::NatMax), intmax(SemiringTag::IntMax),
      nnr(SemiringTag::NonnegRat);
  std::vector<Fixture> out;
  Fixture f1 = make_f1(natmax);
  out.push_back(f1);
  out.push_back(make_f1p(nat));
  out.push_back(make_f1pp());
  Fixture f2 = make_f3_shape(intmax, "f2");
  Fixture f3 = make_f3_shape(natmax, "f3");
  Fixture f3p = make_f3p_shape(nat, false);
  out.push_back(f2);
  out.push_back(f3);
  out.push_back(f3p);
  out.push_back(make_f3pp());
  out.push_back(make_f4(nat));
  out.push_back(make_f3p_shape(nnr, true));
  out.push_back(mirror_fixture(f2));
  out.push_back(mirror_fixture(f3));
  out.push_back(mirror_fixture(f3p));
  return out;
}

Fixture fixture(const std::string& name) {
  const std::string key = canonical_name(name);
  for (auto& f : fixtures())
    if (f.name == key) return f;
  throw DomainError("unknown fixture '" + name + "'");
}

Fixture fixture_over(const std::string& name, SemiringTag tag) {
  const std::string key = canonical_name(name);
  Semiring S(tag, tag == SemiringTag::FinLang ? "ab" : "");
  Fixture fx = [&] {
    if (key == "f1" && is_max_plus(tag)) return make_f1(S);
    if (key == "f1p" && (tag == SemiringTag::Nat || tag == SemiringTag::NonnegRat))
      return make_f1p(S);
    if ((key == "f2" || key == "f3") && is_max_plus(tag)) return make_f3_shape(S, key);
    if (key == "f3p" && (tag == SemiringTag::Nat || tag == SemiringTag::NonnegRat))
      return make_f3p_shape(S, false);
    if (key == "f5" && (tag == SemiringTag::Nat || tag == SemiringTag::NonnegRat))
      return make_f3p_shape(S, true);
    if (key == "f4") return make_f4(S);
    throw DomainError("fixture '" + name + "' has no variant over " + tag_name(tag));
  }();
  Fixture base = fixture(key);
  fx.expected = base.expected;
  return fx;
}

Wfa word_identity_automaton(const std::string& alphabet) {
  Semiring S(SemiringTag::FinLang, alphabet);
  Wfa A(S, alphabet, {"q"});
  A.initial[0] = A.final[0] = S.one();
  for (char a : alphabet) A.at("q", a, "q") = S.words({std::string(1, a)});
  return A;
}

}  // namespace wal
