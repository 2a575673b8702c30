#include "dejima/strategy.hpp"

#include <fstream>
#include <sstream>

#include "dejima/analysis.hpp"
#include "dejima/errors.hpp"
#include "dejima/parser.hpp"

namespace dejima {

PutStrategy PutStrategy::parse(std::string_view text) {
  StrategyDoc doc = parse_strategy_doc(text);
  PutStrategy s;
  s.program = std::move(doc.program);
  for (const HeaderDecl& d : doc.decls) {
    switch (d.role) {
      case HeaderDecl::Role::View:
        if (!s.view.empty())
          throw ValidationError("multiple view declarations ('" + s.view + "' and '" +
                                d.predicate + "')");
        s.view = d.predicate;
        break;
      case HeaderDecl::Role::Source:
        s.sources.push_back(d.predicate);
        break;
      case HeaderDecl::Role::Reference:
        s.references.push_back(d.predicate);
        break;
    }
  }
  if (s.view.empty()) throw ValidationError("strategy declares no view predicate");
  if (s.sources.empty()) throw ValidationError("strategy declares no source predicates");

  std::set<std::string> declared{s.view};
  for (const auto& p : s.sources)
    if (!declared.insert(p).second)
      throw ValidationError("predicate '" + p + "' declared more than once");
  for (const auto& p : s.references)
    if (!declared.insert(p).second)
      throw ValidationError("predicate '" + p + "' declared more than once");

  validate_program(s.program);

  const auto src = s.source_set();
  const auto refs = s.reference_set();
  for (const Rule& r : s.program.rules) {
    if (r.head.delta == DeltaTag::None)
      throw ValidationError("strategy rule head must be a delta relation (+p/-p): " +
                            to_string(r));
    if (r.head.predicate == s.view || refs.count(r.head.predicate))
      throw ValidationError("strategy must not update view or reference predicate '" +
                            r.head.predicate + "': " + to_string(r));
    if (!src.count(r.head.predicate))
      throw ValidationError("delta head '" + r.head.predicate_key() +
                            "' does not name a declared source: " + to_string(r));
    for (const Literal& l : r.body) {
      if (l.is_builtin()) continue;
      if (l.delta != DeltaTag::None) continue;  // derived delta reference
      if (!declared.count(l.predicate))
        throw ValidationError("undeclared predicate '" + l.predicate +
                              "' in rule body: " + to_string(r));
    }
  }
  return s;
}

PutStrategy PutStrategy::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const Error& e) {
    throw ValidationError(file.string() + ": " + e.what());
  }
}

std::string PutStrategy::str() const {
  std::ostringstream os;
  auto decl = [&](const char* role, const std::string& pred) {
    const Schema& sch = program.schemas.at(pred);
    os << role << ": " << pred << "(";
    for (size_t i = 0; i < sch.attrs.size(); ++i) {
      if (i) os << ", ";
      if (std::find(sch.key.begin(), sch.key.end(), i) != sch.key.end()) os << "*";
      os << sch.attrs[i];
    }
    os << ").\n";
  };
  decl("view", view);
  for (const auto& p : sources) decl("source", p);
  for (const auto& p : references) decl("reference", p);
  os << "\n" << to_string(program);
  return os.str();
}

}  // namespace dejima
