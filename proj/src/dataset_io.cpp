#include "sercor/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "sercor/errors.hpp"

namespace sercor {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) {
    const auto begin = field.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      fields.emplace_back();
    } else {
      const auto end = field.find_last_not_of(" \t\r");
      fields.push_back(field.substr(begin, end - begin + 1));
    }
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool parse_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  std::istringstream iss(token);
  iss >> out;
  return static_cast<bool>(iss) && iss.eof();
}

}  // namespace

RegressionData read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset file: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  std::size_t arity = 0;
  bool first_content_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_row(line);

    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (!parse_double(fields[i], row[i])) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first_content_row) {  // header row
        first_content_row = false;
        arity = fields.size();
        continue;
      }
      throw ParseError("line " + std::to_string(line_no) + ": non-numeric value");
    }
    if (first_content_row) {
      first_content_row = false;
      arity = fields.size();
    } else if (fields.size() != arity) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(arity) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line_no) + ": non-finite value");
      }
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw ParseError("dataset has no data rows: " + path);
  if (arity < 2) throw ParseError("dataset needs a response column and at least one regressor");

  const int n = static_cast<int>(rows.size());
  const int p = static_cast<int>(arity) - 1;
  if (n < p + 2) {
    throw ParseError("dataset needs n >= p + 2 rows, got n=" + std::to_string(n) +
                     " p=" + std::to_string(p));
  }

  RegressionData data;
  data.y.resize(n);
  data.x.resize(n, p);
  for (int i = 0; i < n; ++i) {
    data.y(i) = rows[i][0];
    for (int j = 0; j < p; ++j) data.x(i, j) = rows[i][j + 1];
  }
  return data;
}

void write_dataset(const std::string& path, const Eigen::VectorXd& y,
                   const Eigen::MatrixXd& x) {
  if (y.size() != x.rows()) {
    throw DimensionError("response length does not match design row count");
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open dataset file for writing: " + path);

  out << "y";
  for (int j = 0; j < x.cols(); ++j) out << ",x" << (j + 1);
  out << "\n";

  char buf[64];
  for (int i = 0; i < y.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", y(i));
    out << buf;
    for (int j = 0; j < x.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", x(i, j));
      out << ',' << buf;
    }
    out << "\n";
  }
  if (!out) throw ParseError("failed writing dataset file: " + path);
}

}  // namespace sercor
