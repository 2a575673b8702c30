#include "dejima/analysis.hpp"

#include <algorithm>

#include "dejima/errors.hpp"

namespace dejima {

std::map<std::string, size_t> arity_map(const Program& p) {
  std::map<std::string, size_t> arities;
  auto note = [&](const Literal& l, const Rule& r) {
    if (l.is_builtin()) return;
    // Delta relations share the base predicate's arity.
    const std::string base = l.predicate;
    auto [it, fresh] = arities.emplace(base, l.arity());
    if (!fresh && it->second != l.arity())
      throw ValidationError("arity clash on '" + base + "': used with " +
                            std::to_string(l.arity()) + " and " + std::to_string(it->second) +
                            " arguments (in rule: " + to_string(r) + ")");
  };
  for (const Rule& r : p.rules) {
    note(r.head, r);
    for (const Literal& l : r.body) note(l, r);
  }
  for (const auto& [pred, schema] : p.schemas) {
    auto [it, fresh] = arities.emplace(pred, schema.attrs.size());
    if (!fresh && it->second != schema.attrs.size())
      throw ValidationError("arity clash on '" + pred + "': declared with " +
                            std::to_string(schema.attrs.size()) + " attributes but used with " +
                            std::to_string(it->second));
  }
  return arities;
}

namespace {

void check_rule_safety(const Rule& r) {
  std::set<std::string> limited;
  for (const Literal& l : r.body) {
    if (l.is_builtin() || l.negated) continue;
    for (const Term& t : l.args)
      if (t.is_variable()) limited.insert(t.name);
  }
  // Equality to a constant or to an already-limited variable also limits.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Literal& l : r.body) {
      if (!l.is_builtin() || *l.builtin != BuiltinOp::Eq) continue;
      const Term& a = l.args[0];
      const Term& b = l.args[1];
      auto grounded = [&](const Term& t) {
        return t.is_constant() || (t.is_variable() && limited.count(t.name));
      };
      if (a.is_variable() && !limited.count(a.name) && grounded(b)) {
        limited.insert(a.name);
        changed = true;
      }
      if (b.is_variable() && !limited.count(b.name) && grounded(a)) {
        limited.insert(b.name);
        changed = true;
      }
    }
  }
  auto require_limited = [&](const Term& t, const std::string& where) {
    if (t.is_variable() && !limited.count(t.name))
      throw ValidationError("unsafe variable " + t.name + " in " + where +
                            " (in rule: " + to_string(r) + ")");
  };
  for (const Term& t : r.head.args) require_limited(t, "rule head");
  for (const Literal& l : r.body) {
    if (l.is_builtin()) {
      for (const Term& t : l.args) {
        if (t.is_anon())
          throw ValidationError("anonymous variable in a comparison (in rule: " + to_string(r) +
                                ")");
        require_limited(t, "comparison");
      }
    } else if (l.negated) {
      for (const Term& t : l.args) {
        if (t.is_anon())
          throw ValidationError("anonymous variable in a negated literal (in rule: " +
                                to_string(r) + ")");
        require_limited(t, "negated literal");
      }
    }
  }
}

}  // namespace

void validate_program(const Program& p) {
  arity_map(p);
  for (const Rule& r : p.rules) {
    if (r.head.is_builtin())
      throw ValidationError("builtin cannot be a rule head: " + to_string(r));
    if (r.head.negated)
      throw ValidationError("negated rule head: " + to_string(r));
    for (const Term& t : r.head.args)
      if (t.is_anon())
        throw ValidationError("anonymous variable in rule head: " + to_string(r));
    for (const Literal& l : r.body) {
      if (l.is_builtin() && l.negated)
        throw ValidationError("negated builtin (rewrite with the dual operator): " +
                              to_string(r));
      if (l.delta == DeltaTag::Delete && !l.negated)
        throw ValidationError("deletion-delta relation referenced in a body: " + to_string(r));
    }
    check_rule_safety(r);
  }
}

std::set<std::string> idb_predicates(const Program& p) {
  std::set<std::string> idb;
  for (const Rule& r : p.rules) idb.insert(r.head.predicate_key());
  return idb;
}

std::vector<std::set<std::string>> stratify(const Program& p) {
  // Dependency edges head <- body, remembering whether any edge is negative.
  std::set<std::string> preds;
  struct Edge {
    std::string from, to;  // body pred -> head pred
    bool negative;
  };
  std::vector<Edge> edges;
  for (const Rule& r : p.rules) {
    preds.insert(r.head.predicate_key());
    for (const Literal& l : r.body) {
      if (l.is_builtin()) continue;
      preds.insert(l.predicate_key());
      edges.push_back({l.predicate_key(), r.head.predicate_key(), l.negated});
    }
  }
  if (preds.empty()) return {};

  std::map<std::string, int> stratum;
  for (const auto& q : preds) stratum[q] = 0;
  const int bound = static_cast<int>(preds.size());
  bool changed = true;
  int rounds = 0;
  while (changed) {
    changed = false;
    for (const Edge& e : edges) {
      int need = stratum[e.from] + (e.negative ? 1 : 0);
      if (stratum[e.to] < need) {
        stratum[e.to] = need;
        changed = true;
      }
    }
    if (++rounds > bound + 1) {
      // A stratum exceeded the predicate count: negative cycle. Report one.
      for (const Edge& neg : edges) {
        if (!neg.negative) continue;
        // Path from neg.to back to neg.from over dependency edges?
        std::set<std::string> seen{neg.to};
        std::vector<std::string> stack{neg.to};
        std::map<std::string, std::string> parent;
        bool found = neg.to == neg.from;
        while (!stack.empty() && !found) {
          std::string cur = stack.back();
          stack.pop_back();
          for (const Edge& e : edges) {
            if (e.from != cur || seen.count(e.to)) continue;
            seen.insert(e.to);
            parent[e.to] = cur;
            if (e.to == neg.from) {
              found = true;
              break;
            }
            stack.push_back(e.to);
          }
        }
        if (found) {
          std::vector<std::string> cycle{neg.from};
          std::string cur = neg.from;
          while (cur != neg.to && parent.count(cur)) {
            cur = parent[cur];
            cycle.push_back(cur);
          }
          std::string msg = "program is not stratifiable; negative cycle: ";
          for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) msg += *it + " -> ";
          msg += "not " + neg.to + " -> " + neg.to;
          // The cycle text above walks to -> ... -> from -> (not) to.
          throw StratifyError(msg);
        }
      }
      throw StratifyError("program is not stratifiable (negative cycle)");
    }
  }

  int max_stratum = 0;
  for (const auto& [q, s] : stratum) max_stratum = std::max(max_stratum, s);
  std::vector<std::set<std::string>> out(static_cast<size_t>(max_stratum) + 1);
  for (const auto& [q, s] : stratum) out[static_cast<size_t>(s)].insert(q);
  // Drop empty layers (possible when negative jumps skip levels).
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const std::set<std::string>& s) { return s.empty(); }),
            out.end());
  return out;
}

}  // namespace dejima
