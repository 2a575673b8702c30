#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "dejima/ast.hpp"

namespace dejima {

/// A putback program: rules whose heads are all delta relations over the
/// declared source predicates, reading the view and reference predicates.
struct PutStrategy {
  Program program;
  std::string view;
  std::vector<std::string> sources;
  std::vector<std::string> references;

  const Schema& view_schema() const { return program.schemas.at(view); }
  std::set<std::string> source_set() const { return {sources.begin(), sources.end()}; }
  std::set<std::string> reference_set() const {
    return {references.begin(), references.end()};
  }

  /// Parses and validates a strategy file: a header of `view:`, `source:`,
  /// `reference:` declarations followed by delta rules.
  static PutStrategy parse(std::string_view text);
  static PutStrategy load(const std::filesystem::path& file);

  /// Round-trippable text (header then rules).
  std::string str() const;
};

}  // namespace dejima
