#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dejima/value.hpp"

namespace dejima {

/// Named finite relations over constant tuples. Relations are sets; a
/// missing relation and an empty one are indistinguishable to queries and
/// to equality.
class Database {
 public:
  using Map = std::map<std::string, Relation>;

  Database() = default;
  explicit Database(Map rels) : rels_(std::move(rels)) {}

  /// Empty sentinel when the relation is unknown.
  const Relation& relation(const std::string& name) const;

  Relation& touch(const std::string& name) { return rels_[name]; }
  void set(const std::string& name, Relation rel) { rels_[name] = std::move(rel); }
  void add(const std::string& name, Tuple t) { rels_[name].insert(std::move(t)); }
  void erase_relation(const std::string& name) { rels_.erase(name); }

  bool contains(const std::string& name, const Tuple& t) const;
  bool has_relation(const std::string& name) const { return rels_.count(name) != 0; }

  const Map& relations() const { return rels_; }
  std::vector<std::string> names() const;

  /// Arity of the first tuple, if any.
  std::optional<size_t> arity_of(const std::string& name) const;

  /// Semantic equality: a missing relation equals an empty one.
  bool operator==(const Database& o) const;

  std::string str() const;

 private:
  Map rels_;
};

/// Union by relation name. Relations present on both sides are unioned;
/// tuples of mismatched arity within one relation raise DeltaError.
Database merged(const Database& a, const Database& b);

}  // namespace dejima
