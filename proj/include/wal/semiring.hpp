#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wal {

/// Bad input: unknown letter, tag mismatch, malformed file. Maps to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : DomainError(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Budget or solver bound exhausted. Maps to exit code 2.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SemiringTag { Bool, Nat, Int, Rat, NonnegRat, NatMax, IntMax, RatMax, FinLang };

const char* tag_name(SemiringTag t);
SemiringTag parse_tag(std::string_view s);

using Word = std::string;

bool shortlex_less(const Word& x, const Word& y);

/// Max-plus element; an empty optional is -inf.
struct MaxPlus {
  std::optional<mpq_class> v;
  bool is_neg_inf() const { return !v.has_value(); }
  friend bool operator==(const MaxPlus& a, const MaxPlus& b) {
    if (a.v.has_value() != b.v.has_value()) return false;
    return !a.v || *a.v == *b.v;
  }
};

/// Finite language kept sorted in shortlex order without duplicates.
using WordSet = std::vector<Word>;

class Value {
 public:
  using Data = std::variant<bool, mpz_class, mpq_class, MaxPlus, WordSet>;

  Value() : tag_(SemiringTag::Bool), data_(false) {}
  Value(SemiringTag tag, Data d) : tag_(tag), data_(std::move(d)) {}

  SemiringTag tag() const { return tag_; }
  const Data& data() const { return data_; }

  bool as_bool() const { return std::get<bool>(data_); }
  const mpz_class& as_int() const { return std::get<mpz_class>(data_); }
  const mpq_class& as_rat() const { return std::get<mpq_class>(data_); }
  const MaxPlus& as_max() const { return std::get<MaxPlus>(data_); }
  const WordSet& as_words() const { return std::get<WordSet>(data_); }

  friend bool operator==(const Value& a, const Value& b) {
    return a.tag_ == b.tag_ && a.data_ == b.data_;
  }

 private:
  SemiringTag tag_;
  Data data_;
};

using Vector = std::vector<Value>;
using Matrix = std::vector<Vector>;

struct SemiringId {
  SemiringTag tag = SemiringTag::Bool;
  std::string alphabet;  // only meaningful for FinLang

  friend bool operator==(const SemiringId&, const SemiringId&) = default;
};

bool is_max_plus(SemiringTag t);

class Semiring {
 public:
  explicit Semiring(SemiringId id);
  explicit Semiring(SemiringTag tag, std::string alphabet = "");

  const SemiringId& id() const { return id_; }
  SemiringTag tag() const { return id_.tag; }
  const char* name() const { return tag_name(id_.tag); }

  Value zero() const;
  Value one() const;
  Value add(const Value& x, const Value& y) const;
  Value mul(const Value& x, const Value& y) const;
  bool commutative() const { return id_.tag != SemiringTag::FinLang; }

  bool is_zero(const Value& x) const;
  bool is_one(const Value& x) const;

  /// Throws DomainError unless x carries this semiring's tag and lies in its carrier.
  void check(const Value& x) const;

  Value parse(std::string_view text) const;
  std::string render(const Value& x) const;

  // Constructors for the carrier; each validates membership.
  Value from_int(const mpz_class& n) const;
  Value from_rat(const mpq_class& q) const;
  Value neg_inf() const;
  Value words(std::vector<Word> ws) const;
  Value boolean(bool b) const;

  Value sum(const Vector& xs) const;
  Value dot(const Vector& x, const Vector& y) const;

  friend bool operator==(const Semiring& a, const Semiring& b) { return a.id_ == b.id_; }

 private:
  void check_letters(const Word& w) const;
  SemiringId id_;
};

WordSet canonical_words(std::vector<Word> ws);
std::string render_word(const Word& w);  // "eps" for the empty word

}  // namespace wal
