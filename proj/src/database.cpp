#include "dejima/database.hpp"

#include <sstream>

#include "dejima/errors.hpp"

namespace dejima {

namespace {
const Relation kEmpty;
}

const Relation& Database::relation(const std::string& name) const {
  auto it = rels_.find(name);
  return it == rels_.end() ? kEmpty : it->second;
}

bool Database::contains(const std::string& name, const Tuple& t) const {
  auto it = rels_.find(name);
  return it != rels_.end() && it->second.count(t) != 0;
}

std::vector<std::string> Database::names() const {
  std::vector<std::string> out;
  out.reserve(rels_.size());
  for (const auto& [name, rel] : rels_) out.push_back(name);
  return out;
}

std::optional<size_t> Database::arity_of(const std::string& name) const {
  const Relation& rel = relation(name);
  if (rel.empty()) return std::nullopt;
  return rel.begin()->size();
}

bool Database::operator==(const Database& o) const {
  auto nonempty = [](const Map& m) {
    Map out;
    for (const auto& [name, rel] : m)
      if (!rel.empty()) out.emplace(name, rel);
    return out;
  };
  return nonempty(rels_) == nonempty(o.rels_);
}

std::string Database::str() const {
  std::ostringstream os;
  for (const auto& [name, rel] : rels_) {
    os << name << ": {";
    bool first = true;
    for (const Tuple& t : rel) {
      if (!first) os << ", ";
      first = false;
      os << tuple_str(t);
    }
    os << "}\n";
  }
  return os.str();
}

Database merged(const Database& a, const Database& b) {
  Database out = a;
  for (const auto& [name, rel] : b.relations()) {
    Relation& dst = out.touch(name);
    for (const Tuple& t : rel) {
      if (!dst.empty() && dst.begin()->size() != t.size())
        throw DeltaError("arity mismatch merging relation '" + name + "'");
      dst.insert(t);
    }
  }
  return out;
}

}  // namespace dejima
