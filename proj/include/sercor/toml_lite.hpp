#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sercor::toml {

// Minimal TOML subset sufficient for scenario configs:
//   # comments, bare keys, [table], [[array-of-table]] headers (single-level
//   names), and scalar values: basic "strings", integers, floats, booleans.
// Anything else is a ParseError.

struct Value {
  enum class Type { String, Integer, Float, Boolean };
  Type type = Type::String;
  std::string str;
  std::int64_t integer = 0;
  double number = 0.0;
  bool boolean = false;

  // Numeric accessor: integers widen to double.
  double as_number() const;
};

using Table = std::map<std::string, Value>;

struct Document {
  Table root;
  std::map<std::string, Table> tables;
  std::map<std::string, std::vector<Table>> table_arrays;
};

Document parse(const std::string& text);
Document parse_file(const std::string& path);

}  // namespace sercor::toml
