#include "dejima/eval.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dejima/analysis.hpp"
#include "dejima/errors.hpp"

namespace dejima {

namespace {

using Binding = std::map<std::string, Value>;

std::strong_ordering builtin_compare(const Value& a, const Value& b, const Rule& rule) {
  if (a.kind() != b.kind())
    throw EvalError("builtin comparison across scalar kinds: " + a.str() + " (" +
                    kind_name(a.kind()) + ") vs " + b.str() + " (" + kind_name(b.kind()) +
                    ") in rule: " + to_string(rule));
  return compare_same_kind(a, b);
}

bool builtin_holds(BuiltinOp op, const Value& a, const Value& b, const Rule& rule) {
  auto c = builtin_compare(a, b, rule);
  switch (op) {
    case BuiltinOp::Eq:
      return c == std::strong_ordering::equal;
    case BuiltinOp::Neq:
      return c != std::strong_ordering::equal;
    case BuiltinOp::Lt:
      return c == std::strong_ordering::less;
    case BuiltinOp::Leq:
      return c != std::strong_ordering::greater;
  }
  return false;
}

std::optional<Value> term_value(const Term& t, const Binding& env) {
  if (t.is_constant()) return t.value;
  if (t.is_variable()) {
    auto it = env.find(t.name);
    if (it != env.end()) return it->second;
  }
  return std::nullopt;
}

/// Orders body literals so each is executable when reached: positive atoms
/// any time; `=` once one side is grounded (it binds the other); other
/// builtins and negations once all their variables are bound. Safety
/// guarantees a complete schedule exists.
std::vector<size_t> schedule_body(const Rule& rule) {
  const auto& body = rule.body;
  std::vector<size_t> order;
  std::vector<bool> done(body.size(), false);
  std::set<std::string> bound;
  auto grounded = [&](const Term& t) {
    return t.is_constant() || t.is_anon() || (t.is_variable() && bound.count(t.name));
  };
  while (order.size() < body.size()) {
    bool progress = false;
    // Prefer literals that are already fully grounded (cheap filters first),
    // then positive atoms, then equalities that can bind.
    for (int pass = 0; pass < 3 && !progress; ++pass) {
      for (size_t i = 0; i < body.size() && !progress; ++i) {
        if (done[i]) continue;
        const Literal& l = body[i];
        bool all_ground = std::all_of(l.args.begin(), l.args.end(), grounded);
        bool runnable = false;
        if (pass == 0) {
          runnable = all_ground && (l.is_builtin() || l.negated);
        } else if (pass == 1) {
          runnable = !l.is_builtin() && !l.negated;
        } else {
          runnable = l.is_builtin() && *l.builtin == BuiltinOp::Eq &&
                     (grounded(l.args[0]) || grounded(l.args[1]));
        }
        if (!runnable) continue;
        done[i] = true;
        order.push_back(i);
        for (const Term& t : l.args)
          if (t.is_variable()) bound.insert(t.name);
        progress = true;
      }
    }
    if (!progress)
      throw EvalError("internal: no evaluation schedule for rule (unsafe?): " + to_string(rule));
  }
  return order;
}

class RuleEvaluator {
 public:
  RuleEvaluator(const Rule& rule, const Database& db, int distinguished,
                const Relation* delta_rel)
      : rule_(rule), db_(db), distinguished_(distinguished), delta_(delta_rel) {
    order_ = schedule_body(rule);
  }

  void run(Relation& out) {
    Binding env;
    recurse(0, env, out);
  }

  bool satisfiable() {
    Binding env;
    return exists(0, env);
  }

 private:
  const Relation& relation_for(size_t body_index, const Literal& l) const {
    if (static_cast<int>(body_index) == distinguished_ && delta_) return *delta_;
    return db_.relation(l.predicate_key());
  }

  bool match_atom(const Literal& l, const Tuple& fact, Binding& env,
                  std::vector<std::string>& bound_here) const {
    for (size_t k = 0; k < l.args.size(); ++k) {
      const Term& t = l.args[k];
      if (t.is_anon()) continue;
      if (t.is_constant()) {
        if (!(t.value == fact[k])) return false;
        continue;
      }
      auto it = env.find(t.name);
      if (it == env.end()) {
        env.emplace(t.name, fact[k]);
        bound_here.push_back(t.name);
      } else if (!(it->second == fact[k])) {
        return false;
      }
    }
    return true;
  }

  template <typename Emit>
  void step(size_t pos, Binding& env, Emit&& emit) {
    const Literal& l = rule_.body[order_[pos]];
    if (l.is_builtin()) {
      auto a = term_value(l.args[0], env);
      auto b = term_value(l.args[1], env);
      if (*l.builtin == BuiltinOp::Eq && (!a || !b)) {
        if (!a && !b)
          throw EvalError("internal: unschedulable equality in rule: " + to_string(rule_));
        // Binding equality: exactly one side grounded.
        const Term& free = a ? l.args[1] : l.args[0];
        const Value& val = a ? *a : *b;
        env.emplace(free.name, val);
        emit();
        env.erase(free.name);
        return;
      }
      if (!a || !b)
        throw EvalError("internal: unbound variable in builtin of rule: " + to_string(rule_));
      if (builtin_holds(*l.builtin, *a, *b, rule_)) emit();
      return;
    }
    if (l.negated) {
      Tuple probe;
      probe.reserve(l.args.size());
      for (const Term& t : l.args) {
        auto v = term_value(t, env);
        if (!v)
          throw EvalError("internal: unbound variable in negated literal of rule: " +
                          to_string(rule_));
        probe.push_back(*v);
      }
      if (!db_.relation(l.predicate_key()).count(probe)) emit();
      return;
    }
    const Relation& rel = relation_for(order_[pos], l);
    for (const Tuple& fact : rel) {
      if (fact.size() != l.args.size())
        throw EvalError("arity mismatch: relation '" + l.predicate_key() + "' holds tuple " +
                        tuple_str(fact) + " but is used with arity " +
                        std::to_string(l.args.size()));
      std::vector<std::string> bound_here;
      if (match_atom(l, fact, env, bound_here)) emit();
      for (const std::string& name : bound_here) env.erase(name);
    }
  }

  void recurse(size_t pos, Binding& env, Relation& out) {
    if (pos == order_.size()) {
      Tuple head;
      head.reserve(rule_.head.args.size());
      for (const Term& t : rule_.head.args) {
        auto v = term_value(t, env);
        if (!v)
          throw EvalError("internal: unbound head variable in rule: " + to_string(rule_));
        head.push_back(*v);
      }
      out.insert(std::move(head));
      return;
    }
    step(pos, env, [&] { recurse(pos + 1, env, out); });
  }

  bool exists(size_t pos, Binding& env) {
    if (pos == order_.size()) return true;
    bool found = false;
    step(pos, env, [&] {
      if (!found) found = exists(pos + 1, env);
    });
    return found;
  }

  const Rule& rule_;
  const Database& db_;
  int distinguished_;
  const Relation* delta_;
  std::vector<size_t> order_;
};

}  // namespace

Relation eval_rule(const Rule& rule, const Database& db, int distinguished,
                   const Relation* delta_rel) {
  Relation out;
  RuleEvaluator(rule, db, distinguished, delta_rel).run(out);
  return out;
}

bool body_satisfiable(const Rule& rule, const Database& db) {
  return RuleEvaluator(rule, db, -1, nullptr).satisfiable();
}

Database evaluate(const Program& program, const Database& edb) {
  validate_program(program);
  auto strata = stratify(program);
  Database db = edb;

  for (const auto& stratum : strata) {
    std::vector<const Rule*> rules;
    for (const Rule& r : program.rules)
      if (stratum.count(r.head.predicate_key())) rules.push_back(&r);
    if (rules.empty()) continue;

    std::set<std::string> idb;
    for (const Rule* r : rules) idb.insert(r->head.predicate_key());

    // Initial round over the full database.
    std::map<std::string, Relation> delta;
    for (const Rule* r : rules) {
      Relation derived = eval_rule(*r, db);
      const std::string key = r->head.predicate_key();
      Relation& have = db.touch(key);
      for (const Tuple& t : derived)
        if (have.insert(t).second) delta[key].insert(t);
    }

    // Semi-naive iteration: a recursive rule must consume at least one
    // fact discovered in the previous round.
    while (true) {
      std::map<std::string, Relation> next_delta;
      for (const Rule* r : rules) {
        for (size_t i = 0; i < r->body.size(); ++i) {
          const Literal& l = r->body[i];
          if (l.is_builtin() || l.negated) continue;
          auto dit = delta.find(l.predicate_key());
          if (dit == delta.end() || dit->second.empty()) continue;
          Relation derived = eval_rule(*r, db, static_cast<int>(i), &dit->second);
          const std::string key = r->head.predicate_key();
          Relation& have = db.touch(key);
          for (const Tuple& t : derived)
            if (have.insert(t).second) next_delta[key].insert(t);
        }
      }
      bool any = false;
      for (const auto& [k, rel] : next_delta) any = any || !rel.empty();
      if (!any) break;
      delta = std::move(next_delta);
    }

    // Relations for IDB predicates with no derivations should still exist.
    for (const std::string& key : idb) db.touch(key);
  }
  return db;
}

bool derivable(const std::vector<Rule>& rules, const std::string& pred_key, const Database& db,
               const Tuple& fact) {
  for (const Rule& r : rules) {
    if (r.head.predicate_key() != pred_key || r.head.args.size() != fact.size()) continue;
    // Bind head args against the fact, then test body satisfiability.
    Rule goal = r;
    bool ok = true;
    std::map<std::string, Value> bound;
    for (size_t i = 0; i < fact.size() && ok; ++i) {
      const Term& t = goal.head.args[i];
      if (t.is_constant()) {
        ok = t.value == fact[i];
      } else if (t.is_variable()) {
        auto it = bound.find(t.name);
        if (it == bound.end())
          bound.emplace(t.name, fact[i]);
        else
          ok = it->second == fact[i];
      }
    }
    if (!ok) continue;
    // Substitute the head binding into the body and check satisfiability.
    for (Literal& l : goal.body)
      for (Term& t : l.args) {
        if (!t.is_variable()) continue;
        auto it = bound.find(t.name);
        if (it != bound.end()) t = Term::constant(it->second);
      }
    if (body_satisfiable(goal, db)) return true;
  }
  return false;
}

}  // namespace dejima
