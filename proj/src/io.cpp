#include "dejima/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dejima/errors.hpp"

namespace fs = std::filesystem;

namespace dejima {

namespace {

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool looks_like_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= s.size()) return false;
  std::string l = s.substr(0, dot), r = s.substr(dot + 1);
  if (l == "-") return false;
  return looks_like_int(l) && looks_like_int(r);
}

Value classify_field(const std::string& field) {
  if (looks_like_int(field)) {
    try {
      return Value::integer(std::stoll(field));
    } catch (const std::exception&) {
      throw IoError("integer field out of range: " + field);
    }
  }
  if (looks_like_decimal(field)) return Value::decimal(Decimal::parse(field));
  return Value::string(field);
}

std::string csv_field(const Value& v) {
  if (v.kind() != Kind::String) return v.str();
  const std::string& s = v.as_string();
  bool quote = s.empty() || looks_like_int(s) || looks_like_decimal(s);
  for (char c : s)
    if (c == ',' || c == '"' || c == '\n' || c == '\r') quote = true;
  if (!quote && (std::isspace(static_cast<unsigned char>(s.front())) ||
                 std::isspace(static_cast<unsigned char>(s.back()))))
    quote = true;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line, const std::string& where) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  std::vector<bool> quoted_flags;
  size_t i = 0;
  while (i <= line.size()) {
    if (i == line.size()) {
      fields.push_back(cur);
      quoted_flags.push_back(was_quoted);
      break;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      cur += c;
      ++i;
      continue;
    }
    if (c == '"' && cur.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
      ++i;
      continue;
    }
    if (c == ',') {
      fields.push_back(cur);
      quoted_flags.push_back(was_quoted);
      cur.clear();
      was_quoted = false;
      ++i;
      continue;
    }
    cur += c;
    ++i;
  }
  if (quoted) throw IoError("unterminated quote in " + where);
  // Encode quoting into the result by prefixing a marker the caller strips.
  for (size_t k = 0; k < fields.size(); ++k)
    if (quoted_flags[k]) fields[k].insert(0, 1, '\x01');
  return fields;
}

}  // namespace

std::string csv_line(const Tuple& t) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += csv_field(t[i]);
  }
  return out;
}

Database read_csv_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  Database db;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    const std::string pred = file.stem().string();
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    Relation& rel = db.touch(pred);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      Tuple t;
      for (std::string& field :
           split_csv_line(line, file.filename().string() + ":" + std::to_string(lineno))) {
        if (!field.empty() && field[0] == '\x01')
          t.push_back(Value::string(field.substr(1)));
        else
          t.push_back(classify_field(field));
      }
      if (!rel.empty() && rel.begin()->size() != t.size())
        throw IoError("ragged row in " + file.filename().string() + ":" +
                      std::to_string(lineno));
      rel.insert(std::move(t));
    }
  }
  return db;
}

void write_csv_dir(const Database& db, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& [pred, rel] : db.relations()) {
    std::ofstream out(dir / (pred + ".csv"), std::ios::trunc);
    if (!out) throw IoError("cannot write " + (dir / (pred + ".csv")).string());
    for (const Tuple& t : rel) out << csv_line(t) << "\n";
  }
}

namespace {

/// SAX handler capturing the raw text of JSON numbers so decimals survive
/// exactly.
struct DbSax {
  Database db;
  std::string current;
  int depth = 0;  // 0 root, 1 in relation array, 2 in tuple
  Tuple tuple;
  bool errored = false;
  std::string error;

  bool fail(const std::string& msg) {
    errored = true;
    error = msg;
    return false;
  }

  bool null() { return fail("null is not a supported value"); }
  bool boolean(bool) { return fail("boolean is not a supported value"); }
  bool number_integer(std::int64_t v) { return push(Value::integer(v)); }
  bool number_unsigned(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      return fail("integer out of range");
    return push(Value::integer(static_cast<std::int64_t>(v)));
  }
  bool number_float(double, const std::string& raw) {
    try {
      return push(Value::decimal(Decimal::parse(raw)));
    } catch (const std::invalid_argument&) {
      return fail("unsupported number literal: " + raw);
    }
  }
  bool string(std::string& s) { return push(Value::string(s)); }
  bool binary(nlohmann::json::binary_t&) { return fail("binary is not supported"); }

  bool push(Value v) {
    if (depth != 2) return fail("scalar outside a tuple");
    tuple.push_back(std::move(v));
    return true;
  }

  bool start_object(std::size_t) {
    if (depth != 0 || started) return fail("unexpected object");
    started = true;
    return true;
  }
  bool key(std::string& k) {
    current = k;
    db.touch(current);
    return true;
  }
  bool end_object() { return true; }
  bool start_array(std::size_t) {
    if (current.empty()) return fail("top level must be an object of relations");
    ++depth;
    if (depth > 2) return fail("nesting too deep");
    if (depth == 2) tuple.clear();
    return true;
  }
  bool end_array() {
    if (depth == 2) db.add(current, std::move(tuple));
    --depth;
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::json::exception& ex) {
    return fail(std::string(ex.what()) + " at byte " + std::to_string(pos));
  }

  bool started = false;
};

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_value(const Value& v) {
  if (v.kind() == Kind::String) return json_escape(v.as_string());
  return v.str();
}

}  // namespace

Database parse_json_db(std::string_view text) {
  DbSax sax;
  if (!nlohmann::json::sax_parse(text.begin(), text.end(), &sax) || sax.errored)
    throw IoError("invalid database JSON: " + (sax.error.empty() ? "parse error" : sax.error));
  // Arity consistency per relation.
  for (const auto& [name, rel] : sax.db.relations()) {
    for (const Tuple& t : rel)
      if (t.size() != rel.begin()->size())
        throw IoError("ragged tuples in relation '" + name + "'");
  }
  return sax.db;
}

std::string json_db_text(const Database& db) {
  std::ostringstream os;
  os << "{";
  bool first_rel = true;
  for (const auto& [name, rel] : db.relations()) {
    if (!first_rel) os << ",";
    first_rel = false;
    os << "\n  " << json_escape(name) << ": [";
    bool first_tuple = true;
    for (const Tuple& t : rel) {
      if (!first_tuple) os << ", ";
      first_tuple = false;
      os << "[";
      for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ", ";
        os << json_value(t[i]);
      }
      os << "]";
    }
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

Database read_json_db(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_db(buf.str());
  } catch (const IoError& e) {
    throw IoError(file.string() + ": " + e.what());
  }
}

void write_json_db(const Database& db, const fs::path& file) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw IoError("cannot write " + file.string());
  out << json_db_text(db);
}

Database read_database(const fs::path& path) {
  if (fs::is_directory(path)) return read_csv_dir(path);
  if (fs::is_regular_file(path)) return read_json_db(path);
  throw IoError("no such database path: " + path.string());
}

}  // namespace dejima
