#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace dejima {

enum class Kind { Int, Decimal, String };

std::string kind_name(Kind k);

/// Exact decimal constant: mantissa * 10^-scale.
/// Canonical form strips trailing zeros from the mantissa (scale may be 0,
/// which still renders with a decimal point so the kind survives a
/// round-trip).
struct Decimal {
  long long mantissa = 0;
  int scale = 0;

  static Decimal make(long long mantissa, int scale);
  /// Parses "12.05", "-3.0". Throws std::invalid_argument on bad input.
  static Decimal parse(const std::string& text);

  std::string str() const;

  friend bool operator==(const Decimal& a, const Decimal& b) = default;
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
};

/// An ordered scalar constant. Three kinds: integers, decimals, strings.
/// Kinds never compare equal to each other; the container ordering below is
/// total (kind rank first) so values can live in std::set, while builtin
/// comparison semantics live in the evaluator and reject cross-kind pairs.
class Value {
 public:
  Value() : v_(static_cast<long long>(0)) {}

  static Value integer(long long v) { return Value(Repr(v)); }
  static Value decimal(Decimal d) { return Value(Repr(d)); }
  static Value string(std::string s) { return Value(Repr(std::move(s))); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  long long as_int() const { return std::get<long long>(v_); }
  const Decimal& as_decimal() const { return std::get<Decimal>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }

  /// Display text: ints "3", decimals "2.5", strings verbatim.
  std::string str() const;

  bool operator==(const Value& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Value& o) const;

 private:
  using Repr = std::variant<long long, Decimal, std::string>;
  explicit Value(Repr v) : v_(std::move(v)) {}
  Repr v_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

using Tuple = std::vector<Value>;
using Relation = std::set<Tuple>;

/// "(v1, l1, r0)"
std::string tuple_str(const Tuple& t);

/// Three-way comparison within one kind. Precondition: same kind.
std::strong_ordering compare_same_kind(const Value& a, const Value& b);

}  // namespace dejima
