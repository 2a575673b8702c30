#pragma once

#include <optional>
#include <vector>

#include "dejima/ast.hpp"
#include "dejima/database.hpp"

namespace dejima {

/// Bottom-up semi-naive fixpoint per stratum. Returns the input database
/// extended with all derived relations (keyed by predicate key, so delta
/// heads land in "+p"/"-p"). The input is not mutated. Unknown extensional
/// predicates evaluate as empty relations.
Database evaluate(const Program& program, const Database& edb);

/// Head tuples derivable by one rule against `db`. When `distinguished` is
/// set, the body literal at that index (which must be a positive atom)
/// ranges over `delta_rel` instead of its database relation.
Relation eval_rule(const Rule& rule, const Database& db, int distinguished = -1,
                   const Relation* delta_rel = nullptr);

/// True when `fact` is derivable for `pred_key` by any of `rules` against
/// `db` (single-step check; bodies are matched against db as-is).
bool derivable(const std::vector<Rule>& rules, const std::string& pred_key,
               const Database& db, const Tuple& fact);

/// True when the body of `rule` has at least one satisfying binding in
/// `db` (the head is ignored).
bool body_satisfiable(const Rule& rule, const Database& db);

}  // namespace dejima
