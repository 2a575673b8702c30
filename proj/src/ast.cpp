#include "dejima/ast.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dejima {

bool Term::operator==(const Term& o) const {
  if (tag != o.tag) return false;
  switch (tag) {
    case Tag::Constant:
      return value == o.value;
    case Tag::Variable:
      return name == o.name;
    case Tag::Anonymous:
      return true;
  }
  return false;
}

std::string builtin_symbol(BuiltinOp op) {
  switch (op) {
    case BuiltinOp::Eq:
      return "=";
    case BuiltinOp::Neq:
      return "<>";
    case BuiltinOp::Lt:
      return "<";
    case BuiltinOp::Leq:
      return "<=";
  }
  return "?";
}

std::string Literal::predicate_key() const {
  switch (delta) {
    case DeltaTag::Insert:
      return "+" + predicate;
    case DeltaTag::Delete:
      return "-" + predicate;
    case DeltaTag::None:
      break;
  }
  return predicate;
}

Literal Literal::atom(std::string pred, std::vector<Term> args, DeltaTag delta, bool negated) {
  Literal l;
  l.negated = negated;
  l.delta = delta;
  l.predicate = std::move(pred);
  l.args = std::move(args);
  return l;
}

Literal Literal::comparison(BuiltinOp op, Term lhs, Term rhs) {
  Literal l;
  l.builtin = op;
  l.args = {std::move(lhs), std::move(rhs)};
  return l;
}

bool Literal::operator==(const Literal& o) const {
  return negated == o.negated && builtin == o.builtin && delta == o.delta &&
         predicate == o.predicate && args == o.args;
}

bool Rule::operator==(const Rule& o) const { return head == o.head && body == o.body; }

namespace {

bool bare_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return s != "not";
}

std::string quote_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_string(const Term& t) {
  switch (t.tag) {
    case Term::Tag::Variable:
      return t.name;
    case Term::Tag::Anonymous:
      return "_";
    case Term::Tag::Constant:
      if (t.value.kind() == Kind::String) {
        const std::string& s = t.value.as_string();
        return bare_symbol(s) ? s : quote_string(s);
      }
      return t.value.str();
  }
  return "?";
}

std::string to_string(const Literal& l) {
  std::ostringstream os;
  if (l.is_builtin()) {
    os << to_string(l.args[0]) << " " << builtin_symbol(*l.builtin) << " " << to_string(l.args[1]);
    return os.str();
  }
  if (l.negated) os << "not ";
  if (l.delta == DeltaTag::Insert) os << "+";
  if (l.delta == DeltaTag::Delete) os << "-";
  os << l.predicate << "(";
  for (size_t i = 0; i < l.args.size(); ++i) {
    if (i) os << ", ";
    os << to_string(l.args[i]);
  }
  os << ")";
  return os.str();
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  os << to_string(r.head);
  if (!r.body.empty()) {
    os << " :- ";
    for (size_t i = 0; i < r.body.size(); ++i) {
      if (i) os << ", ";
      os << to_string(r.body[i]);
    }
  }
  os << ".";
  return os.str();
}

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const Rule& r : p.rules) os << to_string(r) << "\n";
  return os.str();
}

Rule normalize_rule(const Rule& r) {
  std::map<std::string, std::string> renames;
  auto rename = [&](Term& t) {
    if (!t.is_variable()) return;
    auto it = renames.find(t.name);
    if (it == renames.end())
      it = renames.emplace(t.name, "V" + std::to_string(renames.size() + 1)).first;
    t.name = it->second;
  };
  Rule out = r;
  for (Term& t : out.head.args) rename(t);
  for (Literal& l : out.body)
    for (Term& t : l.args) rename(t);
  return out;
}

std::string rule_key(const Rule& r) { return to_string(normalize_rule(r)); }

bool alpha_equal(const Rule& a, const Rule& b) { return rule_key(a) == rule_key(b); }

Program normalized(const Program& p) {
  std::vector<Rule> rules = p.rules;
  std::sort(rules.begin(), rules.end(),
            [](const Rule& a, const Rule& b) { return rule_key(a) < rule_key(b); });
  rules.erase(std::unique(rules.begin(), rules.end(),
                          [](const Rule& a, const Rule& b) { return rule_key(a) == rule_key(b); }),
              rules.end());
  Program out;
  out.rules = std::move(rules);
  out.schemas = p.schemas;
  return out;
}

bool same_rules(const Program& a, const Program& b) {
  auto keys = [](const Program& p) {
    std::vector<std::string> ks;
    ks.reserve(p.rules.size());
    for (const Rule& r : p.rules) ks.push_back(rule_key(r));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
  };
  return keys(a) == keys(b);
}

}  // namespace dejima
