#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spinring {

/// Empty cells appear where a column does not apply to a row (e.g. a
/// concurrence distance beyond N/2 for the smaller rings of a sweep).
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Index of a column; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
  /// Numeric value of a cell; throws if empty or textual.
  double number(std::size_t row, std::string_view name) const;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

Format parse_format(std::string_view text);

/// Shortest round-trip of the value rounded to 12 significant digits.
std::string format_number(double value);

std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);

/// Parses CSV produced by to_csv. Numeric-looking fields become doubles.
ResultTable parse_csv(std::string_view text);

/// Writes to `path` (parent directories are created). Throws IoError naming
/// the path on failure.
void write_results(const ResultTable& table, const std::filesystem::path& path, Format format);

}  // namespace spinring
