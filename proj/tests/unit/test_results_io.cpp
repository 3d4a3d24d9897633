#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spinring/results_io.hpp"

using namespace spinring;

namespace {

ResultTable sample() {
  ResultTable t;
  t.columns = {"family", "N", "b", "delta", "note"};
  t.rows.push_back({std::string("A"), std::int64_t{6}, 0.0, 1.25e-5, std::monostate{}});
  t.rows.push_back({std::string("B"), std::int64_t{8}, 0.1, 0.3333333333333333, std::string("x,y")});
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-2.5e-7), "-2.5e-07");
}

TEST(Csv, HeaderOnlyForEmptyTable) {
  ResultTable t;
  t.columns = {"a", "b"};
  EXPECT_EQ(to_csv(t), "a,b\n");
}

TEST(Csv, RoundTripIsByteStable) {
  const auto text = to_csv(sample());
  const auto parsed = parse_csv(text);
  EXPECT_EQ(parsed.columns, sample().columns);
  EXPECT_EQ(to_csv(parsed), text);
  EXPECT_DOUBLE_EQ(parsed.number(0, "delta"), 1.25e-5);
  EXPECT_EQ(std::get<std::string>(parsed.rows[1][4]), "x,y");
  EXPECT_TRUE(std::holds_alternative<std::monostate>(parsed.rows[0][4]));
}

TEST(Table, ColumnLookup) {
  const auto t = sample();
  EXPECT_EQ(t.column("b"), 2u);
  EXPECT_FALSE(t.has_column("p"));
  EXPECT_THROW(t.column("p"), std::out_of_range);
  EXPECT_THROW(t.number(0, "note"), std::invalid_argument);
}

TEST(Json, ColumnsAndRowObjects) {
  const auto j = nlohmann::json::parse(to_json(sample()));
  EXPECT_EQ(j["columns"].size(), 5u);
  EXPECT_EQ(j["rows"][1]["family"], "B");
  EXPECT_EQ(j["rows"][0]["N"], 6);
  EXPECT_TRUE(j["rows"][0]["note"].is_null());
}

TEST(WriteResults, CreatesParentsAndReportsFailure) {
  const auto dir = std::filesystem::temp_directory_path() / "spinring_io_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_results(sample(), dir / "t.csv", Format::Csv);
  EXPECT_EQ(slurp(dir / "t.csv"), to_csv(sample()));
  write_results(sample(), dir / "t.json", Format::Json);
  EXPECT_EQ(slurp(dir / "t.json"), to_json(sample()));
  EXPECT_THROW(write_results(sample(), "/proc/spinring_nope/t.csv", Format::Csv), IoError);
  std::filesystem::remove_all(dir.parent_path());
}

TEST(ParseFormat, Names) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}
