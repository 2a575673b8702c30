#include "dejima/delta.hpp"

#include <algorithm>
#include <sstream>

#include "dejima/errors.hpp"

namespace dejima {

namespace {
const Relation kEmpty;
}

void Delta::check_disjoint(const std::string& pred, const Tuple& t, const Map& other,
                           const char* adding) const {
  auto it = other.find(pred);
  if (it != other.end() && it->second.count(t))
    throw DeltaError(std::string("inconsistent delta for '") + pred + "': tuple " +
                     tuple_str(t) + " is both inserted and deleted (adding to " + adding + ")");
}

void Delta::add_insert(const std::string& pred, Tuple t) {
  check_disjoint(pred, t, del_, "insert set");
  ins_[pred].insert(std::move(t));
}

void Delta::add_delete(const std::string& pred, Tuple t) {
  check_disjoint(pred, t, ins_, "delete set");
  del_[pred].insert(std::move(t));
}

void Delta::set_insert(const std::string& pred, Relation rel) {
  for (const Tuple& t : rel) check_disjoint(pred, t, del_, "insert set");
  ins_[pred] = std::move(rel);
}

void Delta::set_delete(const std::string& pred, Relation rel) {
  for (const Tuple& t : rel) check_disjoint(pred, t, ins_, "delete set");
  del_[pred] = std::move(rel);
}

const Relation& Delta::inserts(const std::string& pred) const {
  auto it = ins_.find(pred);
  return it == ins_.end() ? kEmpty : it->second;
}

const Relation& Delta::deletes(const std::string& pred) const {
  auto it = del_.find(pred);
  return it == del_.end() ? kEmpty : it->second;
}

bool Delta::empty() const {
  for (const auto& [p, r] : ins_)
    if (!r.empty()) return false;
  for (const auto& [p, r] : del_)
    if (!r.empty()) return false;
  return true;
}

size_t Delta::size() const {
  size_t n = 0;
  for (const auto& [p, r] : ins_) n += r.size();
  for (const auto& [p, r] : del_) n += r.size();
  return n;
}

std::set<std::string> Delta::touched() const {
  std::set<std::string> out;
  for (const auto& [p, r] : ins_)
    if (!r.empty()) out.insert(p);
  for (const auto& [p, r] : del_)
    if (!r.empty()) out.insert(p);
  return out;
}

Delta Delta::inverse() const {
  Delta out;
  out.ins_ = del_;
  out.del_ = ins_;
  return out;
}

Delta Delta::restricted_to(const std::set<std::string>& preds) const {
  Delta out;
  for (const auto& [p, r] : ins_)
    if (preds.count(p) && !r.empty()) out.ins_[p] = r;
  for (const auto& [p, r] : del_)
    if (preds.count(p) && !r.empty()) out.del_[p] = r;
  return out;
}

bool Delta::operator==(const Delta& o) const {
  auto nonempty = [](const Map& m) {
    Map out;
    for (const auto& [p, r] : m)
      if (!r.empty()) out.emplace(p, r);
    return out;
  };
  return nonempty(ins_) == nonempty(o.ins_) && nonempty(del_) == nonempty(o.del_);
}

std::string Delta::str() const {
  std::ostringstream os;
  auto dump = [&](const Map& m, const char* sign) {
    for (const auto& [p, rel] : m) {
      if (rel.empty()) continue;
      os << sign << p << ": {";
      bool first = true;
      for (const Tuple& t : rel) {
        if (!first) os << ", ";
        first = false;
        os << tuple_str(t);
      }
      os << "}\n";
    }
  };
  dump(ins_, "+");
  dump(del_, "-");
  return os.str();
}

Delta diff(const Database& after, const Database& before) {
  std::set<std::string> names;
  for (const auto& [n, r] : after.relations()) names.insert(n);
  for (const auto& [n, r] : before.relations()) names.insert(n);
  Delta out;
  for (const std::string& name : names) {
    const Relation& a = after.relation(name);
    const Relation& b = before.relation(name);
    if (!a.empty() && !b.empty() && a.begin()->size() != b.begin()->size())
      throw DeltaError("schema mismatch diffing relation '" + name + "': arity " +
                       std::to_string(a.begin()->size()) + " vs " +
                       std::to_string(b.begin()->size()));
    Relation ins, del;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(ins, ins.end()));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(del, del.end()));
    if (!ins.empty()) out.set_insert(name, std::move(ins));
    if (!del.empty()) out.set_delete(name, std::move(del));
  }
  return out;
}

Database apply_delta(const Database& db, const Delta& delta, ApplyMode mode) {
  Database out = db;
  for (const auto& [pred, rel] : delta.delete_map()) {
    if (rel.empty()) continue;
    Relation& dst = out.touch(pred);
    for (const Tuple& t : rel) {
      if (!dst.erase(t) && mode == ApplyMode::Strict)
        throw DeltaError("strict delete of absent tuple from '" + pred + "': " + tuple_str(t));
    }
  }
  for (const auto& [pred, rel] : delta.insert_map()) {
    if (rel.empty()) continue;
    Relation& dst = out.touch(pred);
    for (const Tuple& t : rel) {
      if (!dst.insert(t).second && mode == ApplyMode::Strict)
        throw DeltaError("strict insert of present tuple into '" + pred + "': " + tuple_str(t));
    }
  }
  return out;
}

}  // namespace dejima
