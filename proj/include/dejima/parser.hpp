#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dejima/ast.hpp"

namespace dejima {

/// Parses rule text in the strategy surface syntax:
///   head :- lit, lit, ... .
/// with `not `/`-` prefixing negation in bodies, `+p`/`-p` head sigils for
/// delta relations, `_` for anonymous variables, and infix `=`, `<>`, `<`,
/// `<=`. Validates arity consistency and rule safety.
Program parse_program(std::string_view text);

/// One `view:` / `source:` / `reference:` header declaration.
struct HeaderDecl {
  enum class Role { View, Source, Reference };
  Role role;
  std::string predicate;
  Schema schema;
  int line = 0;
};

/// A strategy file split into header declarations and rules. Rules here are
/// parsed but not yet validated against the header (strategy validation
/// lives in PutStrategy).
struct StrategyDoc {
  std::vector<HeaderDecl> decls;
  Program program;
};

StrategyDoc parse_strategy_doc(std::string_view text);

}  // namespace dejima
