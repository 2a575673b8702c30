#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dejima/ast.hpp"

namespace dejima {

/// Arity of every predicate key ("p", "+p", "-p") as used by the rules.
/// Delta keys are checked against their base predicate. Throws
/// ValidationError on a clash (also against declared schemas).
std::map<std::string, size_t> arity_map(const Program& p);

/// Structural validation: consistent arities, builtin shape, anonymous
/// variable restrictions, and rule safety. Safety uses the limited-variable
/// closure: a variable is limited when it occurs in a positive non-builtin
/// body literal, or is equated (`=`) to a constant or to a limited
/// variable. Every head variable and every variable of a negative or
/// builtin literal must be limited.
void validate_program(const Program& p);

/// Predicate keys that have at least one defining rule.
std::set<std::string> idb_predicates(const Program& p);

/// Stratifies by predicate key. Each returned stratum is a set of predicate
/// keys; extensional predicates land in the first stratum. Empty program
/// yields an empty list. Throws StratifyError naming a negative cycle.
std::vector<std::set<std::string>> stratify(const Program& p);

}  // namespace dejima
