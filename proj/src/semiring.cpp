#include "wal/semiring.hpp"

#include <algorithm>

namespace wal {

namespace {

struct TagName {
  SemiringTag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {SemiringTag::Bool, "BOOL"},         {SemiringTag::Nat, "NAT"},
    {SemiringTag::Int, "INT"},           {SemiringTag::Rat, "RAT"},
    {SemiringTag::NonnegRat, "NONNEG_RAT"}, {SemiringTag::NatMax, "NAT_MAX"},
    {SemiringTag::IntMax, "INT_MAX"},    {SemiringTag::RatMax, "RAT_MAX"},
    {SemiringTag::FinLang, "FINLANG"},
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses [sign]digits starting at pos; returns the integer and advances pos.
mpz_class parse_integer(std::string_view s, std::size_t& pos, bool allow_sign) {
  std::size_t start = pos;
  std::string buf;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    if (!allow_sign) throw ParseError("sign not allowed", pos);
    if (s[pos] == '-') buf.push_back('-');
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < s.size() && is_digit(s[pos])) buf.push_back(s[pos++]);
  if (pos == digits) throw ParseError("expected digit", pos == s.size() ? start : pos);
  return mpz_class(buf);
}

mpq_class parse_rational(std::string_view s, std::size_t& pos) {
  mpz_class p = parse_integer(s, pos, true);
  mpz_class q = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t qpos = pos;
    q = parse_integer(s, pos, false);
    if (q == 0) throw ParseError("zero denominator", qpos);
  }
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

void expect_end(std::string_view s, std::size_t pos) {
  if (pos != s.size()) throw ParseError("trailing characters", pos);
}

std::string render_rat(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

const char* tag_name(SemiringTag t) {
  for (const auto& e : kTagNames)
    if (e.tag == t) return e.name;
  return "?";
}

SemiringTag parse_tag(std::string_view s) {
  for (const auto& e : kTagNames)
    if (s == e.name) return e.tag;
  throw DomainError("unknown semiring tag '" + std::string(s) + "'");
}

bool is_max_plus(SemiringTag t) {
  return t == SemiringTag::NatMax || t == SemiringTag::IntMax || t == SemiringTag::RatMax;
}

bool shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

WordSet canonical_words(std::vector<Word> ws) {
  std::sort(ws.begin(), ws.end(), shortlex_less);
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

std::string render_word(const Word& w) { return w.empty() ? "eps" : w; }

Semiring::Semiring(SemiringId id) : id_(std::move(id)) {
  if (id_.tag != SemiringTag::FinLang) {
    id_.alphabet.clear();
  } else if (id_.alphabet.empty()) {
    throw DomainError("FINLANG needs a nonempty alphabet");
  }
}

Semiring::Semiring(SemiringTag tag, std::string alphabet)
    : Semiring(SemiringId{tag, std::move(alphabet)}) {}

Value Semiring::zero() const {
  switch (tag()) {
    case SemiringTag::Bool: return {tag(), false};
    case SemiringTag::Nat:
    case SemiringTag::Int: return {tag(), mpz_class(0)};
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: return {tag(), mpq_class(0)};
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: return {tag(), MaxPlus{}};
    case SemiringTag::FinLang: return {tag(), WordSet{}};
  }
  throw std::logic_error("bad tag");
}

Value Semiring::one() const {
  switch (tag()) {
    case SemiringTag::Bool: return {tag(), true};
    case SemiringTag::Nat:
    case SemiringTag::Int: return {tag(), mpz_class(1)};
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: return {tag(), mpq_class(1)};
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: return {tag(), MaxPlus{mpq_class(0)}};
    case SemiringTag::FinLang: return {tag(), WordSet{Word{}}};
  }
  throw std::logic_error("bad tag");
}

void Semiring::check(const Value& x) const {
  if (x.tag() != tag())
    throw DomainError(std::string("domain mismatch: expected ") + name() + ", got " +
                      tag_name(x.tag()));
}

Value Semiring::add(const Value& x, const Value& y) const {
  check(x);
  check(y);
  switch (tag()) {
    case SemiringTag::Bool: return {tag(), x.as_bool() || y.as_bool()};
    case SemiringTag::Nat:
    case SemiringTag::Int: return {tag(), mpz_class(x.as_int() + y.as_int())};
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: return {tag(), mpq_class(x.as_rat() + y.as_rat())};
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: {
      const auto& a = x.as_max();
      const auto& b = y.as_max();
      if (a.is_neg_inf()) return y;
      if (b.is_neg_inf()) return x;
      return *a.v < *b.v ? y : x;
    }
    case SemiringTag::FinLang: {
      const auto& a = x.as_words();
      const auto& b = y.as_words();
      WordSet out;
      out.reserve(a.size() + b.size());
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                     shortlex_less);
      return {tag(), std::move(out)};
    }
  }
  throw std::logic_error("bad tag");
}

Value Semiring::mul(const Value& x, const Value& y) const {
  check(x);
  check(y);
  switch (tag()) {
    case SemiringTag::Bool: return {tag(), x.as_bool() && y.as_bool()};
    case SemiringTag::Nat:
    case SemiringTag::Int: return {tag(), mpz_class(x.as_int() * y.as_int())};
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: return {tag(), mpq_class(x.as_rat() * y.as_rat())};
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: {
      const auto& a = x.as_max();
      const auto& b = y.as_max();
      if (a.is_neg_inf() || b.is_neg_inf()) return zero();
      return {tag(), MaxPlus{mpq_class(*a.v + *b.v)}};
    }
    case SemiringTag::FinLang: {
      const auto& a = x.as_words();
      const auto& b = y.as_words();
      std::vector<Word> out;
      out.reserve(a.size() * b.size());
      for (const auto& u : a)
        for (const auto& v : b) out.push_back(u + v);
      return {tag(), canonical_words(std::move(out))};
    }
  }
  throw std::logic_error("bad tag");
}

bool Semiring::is_zero(const Value& x) const { return x == zero(); }
bool Semiring::is_one(const Value& x) const { return x == one(); }

Value Semiring::sum(const Vector& xs) const {
  Value acc = zero();
  for (const auto& x : xs) acc = add(acc, x);
  return acc;
}

Value Semiring::dot(const Vector& x, const Vector& y) const {
  if (x.size() != y.size()) throw DomainError("dot: length mismatch");
  Value acc = zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], y[i]));
  return acc;
}

Value Semiring::boolean(bool b) const {
  if (tag() != SemiringTag::Bool) throw DomainError("boolean value outside BOOL");
  return {tag(), b};
}

Value Semiring::from_int(const mpz_class& n) const {
  switch (tag()) {
    case SemiringTag::Bool:
      if (n != 0 && n != 1) throw DomainError("BOOL value must be 0 or 1");
      return {tag(), n == 1};
    case SemiringTag::Nat:
      if (n < 0) throw DomainError("negative value in NAT");
      return {tag(), n};
    case SemiringTag::Int: return {tag(), n};
    default: return from_rat(mpq_class(n));
  }
}

Value Semiring::from_rat(const mpq_class& q0) const {
  mpq_class q = q0;
  q.canonicalize();
  switch (tag()) {
    case SemiringTag::Bool:
    case SemiringTag::Nat:
    case SemiringTag::Int:
      if (q.get_den() != 1) throw DomainError(std::string("non-integer value in ") + name());
      return from_int(q.get_num());
    case SemiringTag::Rat: return {tag(), q};
    case SemiringTag::NonnegRat:
      if (q < 0) throw DomainError("negative value in NONNEG_RAT");
      return {tag(), q};
    case SemiringTag::NatMax:
      if (q.get_den() != 1 || q < 0) throw DomainError("NAT_MAX values are naturals or -inf");
      return {tag(), MaxPlus{q}};
    case SemiringTag::IntMax:
      if (q.get_den() != 1) throw DomainError("INT_MAX values are integers or -inf");
      return {tag(), MaxPlus{q}};
    case SemiringTag::RatMax: return {tag(), MaxPlus{q}};
    case SemiringTag::FinLang: throw DomainError("numeric value in FINLANG");
  }
  throw std::logic_error("bad tag");
}

Value Semiring::neg_inf() const {
  if (!is_max_plus(tag())) throw DomainError(std::string("-inf outside max-plus: ") + name());
  return zero();
}

void Semiring::check_letters(const Word& w) const {
  for (char c : w)
    if (id_.alphabet.find(c) == std::string::npos)
      throw DomainError(std::string("letter '") + c + "' not in FINLANG alphabet");
}

Value Semiring::words(std::vector<Word> ws) const {
  if (tag() != SemiringTag::FinLang) throw DomainError("word set outside FINLANG");
  for (const auto& w : ws) check_letters(w);
  return {tag(), canonical_words(std::move(ws))};
}

Value Semiring::parse(std::string_view s) const {
  std::size_t pos = 0;
  switch (tag()) {
    case SemiringTag::Bool:
      if (s == "0") return boolean(false);
      if (s == "1") return boolean(true);
      throw ParseError("BOOL expects 0 or 1", 0);
    case SemiringTag::Nat:
    case SemiringTag::Int: {
      mpz_class n = parse_integer(s, pos, true);
      expect_end(s, pos);
      if (tag() == SemiringTag::Nat && n < 0) throw ParseError("negative value in NAT", 0);
      return {tag(), n};
    }
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat:
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: {
      if (is_max_plus(tag()) && s == "-inf") return zero();
      mpq_class q = parse_rational(s, pos);
      expect_end(s, pos);
      try {
        return from_rat(q);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
      }
    }
    case SemiringTag::FinLang: {
      if (s.empty() || s.front() != '{') throw ParseError("expected '{'", 0);
      if (s.back() != '}') throw ParseError("expected '}'", s.size());
      std::vector<Word> out;
      std::size_t i = 1;
      const std::size_t end = s.size() - 1;
      if (i == end) return {tag(), WordSet{}};
      while (true) {
        std::size_t j = s.find(',', i);
        if (j == std::string_view::npos || j > end) j = end;
        std::string_view tok = s.substr(i, j - i);
        if (tok.empty()) throw ParseError("empty word token (use eps)", i);
        if (tok == "eps") {
          out.emplace_back();
        } else {
          for (std::size_t k = 0; k < tok.size(); ++k)
            if (id_.alphabet.find(tok[k]) == std::string::npos)
              throw ParseError(std::string("letter '") + tok[k] + "' not in alphabet", i + k);
          out.emplace_back(tok);
        }
        if (j == end) break;
        i = j + 1;
      }
      return {tag(), canonical_words(std::move(out))};
    }
  }
  throw std::logic_error("bad tag");
}

std::string Semiring::render(const Value& x) const {
  check(x);
  switch (tag()) {
    case SemiringTag::Bool: return x.as_bool() ? "1" : "0";
    case SemiringTag::Nat:
    case SemiringTag::Int: return x.as_int().get_str();
    case SemiringTag::Rat:
    case SemiringTag::NonnegRat: return render_rat(x.as_rat());
    case SemiringTag::NatMax:
    case SemiringTag::IntMax:
    case SemiringTag::RatMax: {
      const auto& m = x.as_max();
      return m.is_neg_inf() ? "-inf" : render_rat(*m.v);
    }
    case SemiringTag::FinLang: {
      std::string out = "{";
      bool first = true;
      for (const auto& w : x.as_words()) {
        if (!first) out += ",";
        first = false;
        out += render_word(w);
      }
      return out + "}";
    }
  }
  throw std::logic_error("bad tag");
}

}  // namespace wal
