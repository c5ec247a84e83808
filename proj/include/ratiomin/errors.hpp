#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ratiomin {

/// Failure categories surfaced by the library. The names mirror the
/// machine-readable codes emitted in CLI error objects.
enum class Errc {
  mismatched_lengths,
  non_positive_element,
  too_short,
  index_out_of_range,
  duplicate_index,
  empty_selection,
  invalid_subset_size,
  all_excluded,
  enumeration_cap_exceeded,
  invalid_greedy_set,
  parse_error,
  not_unit,
  not_orthonormal,
  zero_row,
  degenerate_selection,
};

constexpr const char* errc_name(Errc code) {
  switch (code) {
    case Errc::mismatched_lengths: return "MismatchedLengths";
    case Errc::non_positive_element: return "NonPositiveElement";
    case Errc::too_short: return "TooShort";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::duplicate_index: return "DuplicateIndex";
    case Errc::empty_selection: return "EmptySelection";
    case Errc::invalid_subset_size: return "InvalidSubsetSize";
    case Errc::all_excluded: return "AllExcluded";
    case Errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case Errc::invalid_greedy_set: return "InvalidGreedySet";
    case Errc::parse_error: return "ParseError";
    case Errc::not_unit: return "NotUnit";
    case Errc::not_orthonormal: return "NotOrthonormal";
    case Errc::zero_row: return "ZeroRow";
    case Errc::degenerate_selection: return "DegenerateSelection";
  }
  return "Unknown";
}

/// Domain error. `index` carries the offending 1-based element index (or file
/// line number for parse errors), -1 when not applicable; `where` names the
/// array or file involved, empty when not applicable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, long long index = -1,
        std::string where = {})
      : std::runtime_error(message),
        code_(code),
        index_(index),
        where_(std::move(where)) {}

  Errc code() const { return code_; }
  long long index() const { return index_; }
  const std::string& where() const { return where_; }

 private:
  Errc code_;
  long long index_;
  std::string where_;
};

/// Bad command-line or configuration input; maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratiomin
