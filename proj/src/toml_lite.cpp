#include "sercor/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sercor/errors.hpp"

namespace sercor::toml {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("toml line " + std::to_string(line) + ": " + message);
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Removes a trailing comment that is not inside a basic string.
std::string strip_comment(const std::string& s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
    if (s[i] == '#' && !in_string) return s.substr(0, i);
  }
  return s;
}

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

Value parse_value(const std::string& raw, int line) {
  if (raw.empty()) fail(line, "missing value");
  Value v;
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') fail(line, "unterminated string");
    v.type = Value::Type::String;
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      char c = raw[i];
      if (c == '\\') {
        if (i + 2 >= raw.size() + 1) fail(line, "dangling escape");
        char e = raw[++i];
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail(line, std::string("unsupported escape \\") + e);
        }
      } else if (c == '"') {
        fail(line, "unexpected quote inside string");
      } else {
        out.push_back(c);
      }
    }
    v.str = out;
    return v;
  }
  if (raw == "true" || raw == "false") {
    v.type = Value::Type::Boolean;
    v.boolean = raw == "true";
    return v;
  }
  const bool looks_float = raw.find_first_of(".eE") != std::string::npos &&
                           raw.find_first_not_of("+-0123456789.eE") == std::string::npos;
  if (!looks_float) {
    std::int64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), parsed);
    if (ec == std::errc() && ptr == raw.data() + raw.size()) {
      v.type = Value::Type::Integer;
      v.integer = parsed;
      v.number = static_cast<double>(parsed);
      return v;
    }
  }
  {
    std::istringstream iss(raw);
    double parsed = 0.0;
    iss >> parsed;
    if (iss && iss.eof()) {
      v.type = Value::Type::Float;
      v.number = parsed;
      return v;
    }
  }
  fail(line, "cannot parse value '" + raw + "'");
}

}  // namespace

double Value::as_number() const {
  switch (type) {
    case Type::Integer: return static_cast<double>(integer);
    case Type::Float: return number;
    default: throw ParseError("value is not numeric");
  }
}

Document parse(const std::string& text) {
  Document doc;
  Table* current = &doc.root;

  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const std::string line = strip(strip_comment(raw_line));
    if (line.empty()) continue;

    if (line.front() == '[') {
      const bool is_array = line.size() > 1 && line[1] == '[';
      const std::string close = is_array ? "]]" : "]";
      if (line.substr(line.size() - close.size()) != close) {
        fail(line_no, "malformed table header");
      }
      const std::string name = strip(line.substr(is_array ? 2 : 1,
                                                 line.size() - 2 * (is_array ? 2 : 1)));
      if (!valid_key(name)) fail(line_no, "invalid table name '" + name + "'");
      if (is_array) {
        doc.table_arrays[name].emplace_back();
        current = &doc.table_arrays[name].back();
      } else {
        if (doc.tables.count(name)) fail(line_no, "duplicate table [" + name + "]");
        current = &doc.tables[name];
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = strip(line.substr(0, eq));
    if (!valid_key(key)) fail(line_no, "invalid key '" + key + "'");
    if (current->count(key)) fail(line_no, "duplicate key '" + key + "'");
    (*current)[key] = parse_value(strip(line.substr(eq + 1)), line_no);
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

}  // namespace sercor::toml
