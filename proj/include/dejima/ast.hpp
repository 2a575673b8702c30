#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dejima/value.hpp"

namespace dejima {

/// A term is a constant, a named variable, or the anonymous variable `_`.
struct Term {
  enum class Tag { Constant, Variable, Anonymous };

  Tag tag = Tag::Anonymous;
  Value value;       // when Constant
  std::string name;  // when Variable

  static Term constant(Value v) { return Term{Tag::Constant, std::move(v), {}}; }
  static Term variable(std::string n) { return Term{Tag::Variable, {}, std::move(n)}; }
  static Term anon() { return Term{Tag::Anonymous, {}, {}}; }

  bool is_constant() const { return tag == Tag::Constant; }
  bool is_variable() const { return tag == Tag::Variable; }
  bool is_anon() const { return tag == Tag::Anonymous; }

  bool operator==(const Term& o) const;
};

enum class BuiltinOp { Eq, Neq, Lt, Leq };

std::string builtin_symbol(BuiltinOp op);

/// Delta marker on a predicate: +p collects insertions, -p deletions.
enum class DeltaTag { None, Insert, Delete };

/// A body or head literal: either a (possibly negated, possibly
/// delta-tagged) predicate atom, or a two-argument builtin comparison.
struct Literal {
  bool negated = false;
  std::optional<BuiltinOp> builtin;
  DeltaTag delta = DeltaTag::None;
  std::string predicate;  // empty for builtins
  std::vector<Term> args;

  bool is_builtin() const { return builtin.has_value(); }
  size_t arity() const { return args.size(); }

  /// Internal relation key: "p", "+p", or "-p".
  std::string predicate_key() const;

  static Literal atom(std::string pred, std::vector<Term> args,
                      DeltaTag delta = DeltaTag::None, bool negated = false);
  static Literal comparison(BuiltinOp op, Term lhs, Term rhs);

  bool operator==(const Literal& o) const;
};

struct Rule {
  Literal head;
  std::vector<Literal> body;

  bool operator==(const Rule& o) const;
};

/// Declared attribute names for a predicate; `key` holds the indices of the
/// key attributes (empty means no key declared).
struct Schema {
  std::vector<std::string> attrs;
  std::vector<size_t> key;

  bool operator==(const Schema& o) const = default;
};

struct Program {
  std::vector<Rule> rules;
  std::map<std::string, Schema> schemas;  // keyed by base predicate name
};

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);

/// Canonical variable renaming (first occurrence order: head, then body).
Rule normalize_rule(const Rule& r);

/// Canonical textual key of a rule, stable under variable renaming.
std::string rule_key(const Rule& r);

bool alpha_equal(const Rule& a, const Rule& b);

/// Dedupes and sorts rules by canonical key; schemas carry over.
Program normalized(const Program& p);

/// True when both programs contain the same multiset of rules modulo
/// variable renaming (rule order and duplicates ignored).
bool same_rules(const Program& a, const Program& b);

}  // namespace dejima
