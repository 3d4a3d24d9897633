#include "spinring/results_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"

namespace spinring {

std::size_t ResultTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

bool ResultTable::has_column(std::string_view name) const {
  for (const auto& c : columns) {
    if (c == name) return true;
  }
  return false;
}

double ResultTable::number(std::size_t row, std::string_view name) const {
  const auto& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  throw std::invalid_argument("cell '" + std::string(name) + "' is not numeric");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (expected csv, json)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  // Re-shorten: parse the 12-digit value back and emit its shortest representation.
  double rounded = 0.0;
  std::from_chars(buf.data(), res.ptr, rounded);
  res = std::to_chars(buf.data(), buf.data() + buf.size(), rounded);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_number(v);
      double rounded = 0.0;
      const auto text = format_number(v);
      std::from_chars(text.data(), text.data() + text.size(), rounded);
      return rounded;
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

Cell parse_cell(const std::string& text) {
  if (text.empty()) return std::monostate{};
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && ptr == text.data() + text.size()) return v;
  return text;
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += cell_text(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("row width does not match the header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

ResultTable parse_csv(std::string_view text) {
  ResultTable table;
  bool header = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (header) {
      table.columns = split_csv_line(line);
      header = false;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& field : split_csv_line(line)) row.push_back(parse_cell(field));
    if (row.size() != table.columns.size()) throw IoError("CSV row width does not match the header");
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_results(const ResultTable& table, const std::filesystem::path& path, Format format) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory for " + path.string() + ": " + ec.message());
  const std::string body = format == Format::Csv ? to_csv(table) : to_json(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace spinring
