#include "ratiomin/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

namespace ratiomin {

namespace {

std::string strip(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open " + path, -1, path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // strip a UTF-8 BOM if present
  if (!lines.empty() && lines[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    lines[0].erase(0, 3);
  }
  return lines;
}

std::vector<std::string> split_csv_pair(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(strip(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(strip(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_double_token(const std::string& token, long long line_number,
                          const std::string& path) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size() || token.empty()) {
    throw Error(Errc::parse_error,
                "bad number '" + token + "' at line " +
                    std::to_string(line_number),
                line_number, path);
  }
  return value;
}

template <class PushRow>
void walk_csv(const std::string& path, PushRow&& push_row) {
  const auto lines = read_lines(path);
  if (lines.empty() || strip(lines[0]) != "a,b") {
    throw Error(Errc::parse_error, "expected header 'a,b' at line 1", 1, path);
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const long long line_number = static_cast<long long>(li) + 1;
    if (strip(lines[li]).empty()) continue;  // trailing blank lines
    const auto fields = split_csv_pair(lines[li]);
    if (fields.size() != 2) {
      throw Error(Errc::parse_error,
                  "expected two comma-separated values at line " +
                      std::to_string(line_number),
                  line_number, path);
    }
    push_row(fields[0], fields[1], line_number);
  }
}

}  // namespace

std::optional<Decimal> parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  const auto size = text.size();
  bool negative = false;
  if (pos < size && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long long exponent = 0;
  while (pos < size && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
  }
  if (pos < size && text[pos] == '.') {
    ++pos;
    while (pos < size && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      --exponent;
    }
  }
  if (digits.empty()) return std::nullopt;
  if (pos < size && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < size && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= size || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return std::nullopt;
    }
    long long exp_value = 0;
    while (pos < size && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exp_value = exp_value * 10 + (text[pos++] - '0');
      if (exp_value > 1'000'000) return std::nullopt;  // absurd exponent
    }
    exponent += exp_negative ? -exp_value : exp_value;
  }
  if (pos != size) return std::nullopt;

  // cpp_int would read a leading zero as an octal prefix
  const std::size_t first_nonzero = digits.find_first_not_of('0');
  digits.erase(0, std::min(first_nonzero, digits.size() - 1));

  Decimal result;
  result.mantissa = BigInt(digits);
  if (negative) result.mantissa = -result.mantissa;
  result.exponent = exponent;
  return result;
}

std::vector<BigInt> normalize_decimals(std::span<const Decimal> values) {
  long long min_exponent = 0;
  for (const Decimal& d : values) {
    min_exponent = std::min(min_exponent, d.exponent);
  }
  const long long scale = -min_exponent;  // >= 0
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const Decimal& d : values) {
    BigInt v = d.mantissa;
    for (long long e = 0; e < d.exponent + scale; ++e) v *= 10;
    out.push_back(std::move(v));
  }
  return out;
}

ProblemInstance load_instance_csv(const std::string& path) {
  std::vector<Decimal> a_raw, b_raw;
  walk_csv(path, [&](const std::string& a_text, const std::string& b_text,
                     long long line_number) {
    auto a_value = parse_decimal(a_text);
    if (!a_value) {
      throw Error(Errc::parse_error,
                  "bad number '" + a_text + "' at line " +
                      std::to_string(line_number),
                  line_number, path);
    }
    auto b_value = parse_decimal(b_text);
    if (!b_value) {
      throw Error(Errc::parse_error,
                  "bad number '" + b_text + "' at line " +
                      std::to_string(line_number),
                  line_number, path);
    }
    a_raw.push_back(std::move(*a_value));
    b_raw.push_back(std::move(*b_value));
  });

  // one shared power of ten across both arrays
  std::vector<Decimal> all;
  all.reserve(a_raw.size() * 2);
  all.insert(all.end(), a_raw.begin(), a_raw.end());
  all.insert(all.end(), b_raw.begin(), b_raw.end());
  auto scaled = normalize_decimals(all);
  std::vector<BigInt> a(scaled.begin(),
                        scaled.begin() + static_cast<long long>(a_raw.size()));
  std::vector<BigInt> b(scaled.begin() + static_cast<long long>(a_raw.size()),
                        scaled.end());
  return validate_instance(std::move(a), std::move(b));
}

FloatInstance load_instance_csv_float(const std::string& path) {
  std::vector<double> a, b;
  walk_csv(path, [&](const std::string& a_text, const std::string& b_text,
                     long long line_number) {
    a.push_back(parse_double_token(a_text, line_number, path));
    b.push_back(parse_double_token(b_text, line_number, path));
  });
  return validate_instance(std::move(a), std::move(b));
}

Matrix load_matrix(const std::string& path) {
  const auto lines = read_lines(path);
  std::vector<std::vector<double>> rows;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const long long line_number = static_cast<long long>(li) + 1;
    std::string text = lines[li];
    std::replace(text.begin(), text.end(), ',', ' ');
    if (strip(text).empty()) continue;
    std::istringstream stream(text);
    std::vector<double> row;
    std::string token;
    while (stream >> token) {
      row.push_back(parse_double_token(token, line_number, path));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::parse_error,
                  "row at line " + std::to_string(line_number) + " has " +
                      std::to_string(row.size()) + " values, expected " +
                      std::to_string(rows.front().size()),
                  line_number, path);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(Errc::parse_error, "no rows in " + path, -1, path);
  }
  Matrix matrix;
  matrix.rows = static_cast<int>(rows.size());
  matrix.cols = static_cast<int>(rows.front().size());
  matrix.data.reserve(static_cast<std::size_t>(matrix.rows) * matrix.cols);
  for (const auto& row : rows) {
    matrix.data.insert(matrix.data.end(), row.begin(), row.end());
  }
  return matrix;
}

std::vector<double> load_vector(const std::string& path) {
  const Matrix matrix = load_matrix(path);
  if (matrix.cols != 1) {
    throw Error(Errc::parse_error,
                "expected a single column in " + path + ", found " +
                    std::to_string(matrix.cols),
                -1, path);
  }
  return matrix.data;
}

}  // namespace ratiomin
