#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratiomin/gappy.hpp"
#include "ratiomin/instance.hpp"

namespace ratiomin {

/// A parsed decimal literal: value = mantissa * 10^exponent.
struct Decimal {
  BigInt mantissa;
  long long exponent = 0;
};

/// Accepts [+-]digits[.digits][(e|E)[+-]digits]. Returns nullopt on any
/// other shape.
std::optional<Decimal> parse_decimal(std::string_view text);

/// Scales all decimals by one common power of ten so every value becomes an
/// integer. Scaling a and b together leaves every ratio comparison intact.
std::vector<BigInt> normalize_decimals(std::span<const Decimal> values);

/// CSV with header `a,b` and one decimal pair per data row (row 1 of data is
/// index 1). Exact path: decimals are normalized to big integers.
ProblemInstance load_instance_csv(const std::string& path);

/// Same file format, parsed straight to binary64.
FloatInstance load_instance_csv_float(const std::string& path);

/// Dense text matrix: one row per line, comma or whitespace delimited.
Matrix load_matrix(const std::string& path);

/// Single-column file, one value per line.
std::vector<double> load_vector(const std::string& path);

}  // namespace ratiomin
