#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dejima/database.hpp"

namespace dejima {

/// Directory of CSV files, one per relation, filename "<predicate>.csv",
/// no header, fields in attribute order. Unquoted fields are classified as
/// integer, decimal, or string by their lexical form; quoted fields are
/// always strings. Writers sort tuples and quote only when needed, so
/// write-then-read is the identity.
Database read_csv_dir(const std::filesystem::path& dir);
void write_csv_dir(const Database& db, const std::filesystem::path& dir);

/// Single JSON document {"relation": [[...], ...]}. Integers and strings
/// map to the native JSON types; decimals are JSON numbers with a fraction
/// part, parsed back exactly from their literal text.
Database parse_json_db(std::string_view text);
std::string json_db_text(const Database& db);
Database read_json_db(const std::filesystem::path& file);
void write_json_db(const Database& db, const std::filesystem::path& file);

/// Dispatch by path type: a directory reads as CSV, a file as JSON.
Database read_database(const std::filesystem::path& path);

std::string csv_line(const Tuple& t);

}  // namespace dejima
