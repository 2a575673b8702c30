#include "dejima/value.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dejima {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Int:
      return "int";
    case Kind::Decimal:
      return "decimal";
    case Kind::String:
      return "string";
  }
  return "?";
}

Decimal Decimal::make(long long mantissa, int scale) {
  if (scale < 0 || scale > 18) throw std::invalid_argument("decimal scale out of range");
  while (scale > 0 && mantissa % 10 == 0) {
    mantissa /= 10;
    --scale;
  }
  return Decimal{mantissa, scale};
}

Decimal Decimal::parse(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= text.size())
    throw std::invalid_argument("not a decimal literal: " + text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  int scale = static_cast<int>(text.size() - dot - 1);
  if (scale > 18) throw std::invalid_argument("decimal scale out of range: " + text);
  size_t pos = 0;
  long long mantissa = std::stoll(digits, &pos);
  if (pos != digits.size()) throw std::invalid_argument("not a decimal literal: " + text);
  return make(mantissa, scale);
}

std::string Decimal::str() const {
  bool neg = mantissa < 0;
  std::string digits = std::to_string(neg ? -mantissa : mantissa);
  if (static_cast<int>(digits.size()) <= scale)
    digits.insert(0, static_cast<size_t>(scale) - digits.size() + 1, '0');
  std::string out = neg ? "-" : "";
  if (scale == 0) {
    out += digits + ".0";
  } else {
    out += digits.substr(0, digits.size() - scale) + "." + digits.substr(digits.size() - scale);
  }
  return out;
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  int s = std::max(a.scale, b.scale);
  __int128 av = a.mantissa, bv = b.mantissa;
  for (int i = a.scale; i < s; ++i) av *= 10;
  for (int i = b.scale; i < s; ++i) bv *= 10;
  if (av < bv) return std::strong_ordering::less;
  if (av > bv) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Value::str() const {
  switch (kind()) {
    case Kind::Int:
      return std::to_string(as_int());
    case Kind::Decimal:
      return as_decimal().str();
    case Kind::String:
      return as_string();
  }
  return "?";
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  if (v_.index() != o.v_.index()) return v_.index() <=> o.v_.index();
  return compare_same_kind(*this, o);
}

std::strong_ordering compare_same_kind(const Value& a, const Value& b) {
  switch (a.kind()) {
    case Kind::Int:
      return a.as_int() <=> b.as_int();
    case Kind::Decimal:
      return a.as_decimal() <=> b.as_decimal();
    case Kind::String:
      return a.as_string().compare(b.as_string()) <=> 0;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

std::string tuple_str(const Tuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << t[i];
  }
  os << ")";
  return os.str();
}

}  // namespace dejima
