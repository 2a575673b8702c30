#pragma once

#include <map>
#include <set>
#include <string>

#include "dejima/database.hpp"
#include "dejima/value.hpp"

namespace dejima {

/// Per-relation insertion and deletion sets. For each predicate the two
/// sets stay disjoint; the mutators enforce it.
class Delta {
 public:
  using Map = std::map<std::string, Relation>;

  void add_insert(const std::string& pred, Tuple t);
  void add_delete(const std::string& pred, Tuple t);
  void set_insert(const std::string& pred, Relation rel);
  void set_delete(const std::string& pred, Relation rel);

  const Relation& inserts(const std::string& pred) const;
  const Relation& deletes(const std::string& pred) const;
  const Map& insert_map() const { return ins_; }
  const Map& delete_map() const { return del_; }

  bool empty() const;
  /// Number of tuples across both sets.
  size_t size() const;

  /// Predicates with a non-empty insert or delete set.
  std::set<std::string> touched() const;

  Delta inverse() const;
  Delta restricted_to(const std::set<std::string>& preds) const;

  bool operator==(const Delta& o) const;

  std::string str() const;

 private:
  void check_disjoint(const std::string& pred, const Tuple& t, const Map& other,
                      const char* adding) const;
  Map ins_, del_;
};

/// Per-relation set difference in both directions:
/// insert = after - before, delete = before - after.
/// Relations appearing on one side only count as empty on the other; a
/// relation with different arities on the two sides raises DeltaError.
Delta diff(const Database& after, const Database& before);

enum class ApplyMode { Strict, Lenient };

/// Deletions removed first, then insertions added. Strict mode requires
/// every deleted tuple present and every inserted tuple absent and raises
/// DeltaError naming the relation and tuple otherwise; lenient mode treats
/// violations as no-ops.
Database apply_delta(const Database& db, const Delta& delta,
                     ApplyMode mode = ApplyMode::Strict);

}  // namespace dejima
