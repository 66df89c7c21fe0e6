#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncnn/errors.hpp"
#include "ncnn/recurrences.hpp"
#include "ncnn/sequence_io.hpp"

using namespace ncnn;

namespace {

SequenceTable small_table() {
  return SequenceTable{"pbar231", 0, {BigInt(1), BigInt(1), BigInt(4), BigInt(19)}};
}

std::string written(const SequenceTable& t, TableFormat f) {
  std::ostringstream out;
  write_table(t, f, out);
  return out.str();
}

SequenceTable reread(const std::string& text, TableFormat f, const std::string& name) {
  std::istringstream in(text);
  return read_table(in, f, name);
}

}  // namespace

TEST_CASE("exact output formats") {
  const auto t = small_table();
  CHECK(written(t, TableFormat::BFile) == "0 1\n1 1\n2 4\n3 19\n");
  CHECK(written(t, TableFormat::Csv) == "n,value\n0,1\n1,1\n2,4\n3,19\n");
  CHECK(written(t, TableFormat::Json) == R"({"name":"pbar231","offset":0,"values":["1","1","4","19"]})" "\n");
  const SequenceTable shifted{"q122", 1, {BigInt(1), BigInt(2)}};
  CHECK(written(shifted, TableFormat::BFile) == "1 1\n2 2\n");
}

TEST_CASE("format names") {
  CHECK(parse_table_format("bfile") == TableFormat::BFile);
  CHECK(parse_table_format("csv") == TableFormat::Csv);
  CHECK(parse_table_format("json") == TableFormat::Json);
  CHECK(std::string(table_format_name(TableFormat::Csv)) == "csv");
  CHECK_THROWS_AS(parse_table_format("xml"), ValidationError);
}

TEST_CASE("property: every family round-trips through every format") {
  for (const auto& name : family_names()) {
    const auto t = compute_family(name, 60);
    for (TableFormat f : {TableFormat::BFile, TableFormat::Csv, TableFormat::Json}) {
      CHECK(reread(written(t, f), f, name) == t);
    }
  }
}

TEST_CASE("b-file comments and blank lines") {
  const auto t = reread("# header\n\n0 1\n1 1\n# mid\n2 4\n3 19\n", TableFormat::BFile, "pbar231");
  CHECK(t == small_table());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(reread("0 1\n2 4\n", TableFormat::BFile, "x"), ValidationError);
  CHECK_THROWS_AS(reread("0 1\n1\n", TableFormat::BFile, "x"), ValidationError);
  CHECK_THROWS_AS(reread("0 1\n1 abc\n", TableFormat::BFile, "x"), ValidationError);
  CHECK_THROWS_AS(reread("n;value\n0;1\n", TableFormat::Csv, "x"), ValidationError);
  CHECK_THROWS_AS(reread("n,value\n0,1\n0,1\n", TableFormat::Csv, "x"), ValidationError);
  CHECK_THROWS_AS(reread("{\"name\":\"x\"}", TableFormat::Json, "x"), ValidationError);
  CHECK_THROWS_AS(reread("{\"name\":\"x\",\"offset\":0,\"values\":[1]}", TableFormat::Json, "x"),
                  ValidationError);
  CHECK_THROWS_AS(reread("not json", TableFormat::Json, "x"), ValidationError);
}

TEST_CASE("export and import files") {
  const auto dir = std::filesystem::temp_directory_path() / "ncnn_io_test";
  std::filesystem::create_directories(dir);
  const auto t = compute_family("p231", 40);
  export_table(t, TableFormat::BFile, dir / "p231.txt");
  CHECK(import_table(dir / "p231.txt", TableFormat::BFile, "p231") == t);
  CHECK_THROWS_AS(export_table(t, TableFormat::BFile, dir / "missing" / "x.txt"), IoError);
  CHECK_THROWS_AS(import_table(dir / "absent.txt", TableFormat::BFile, "p231"), IoError);
  std::filesystem::remove_all(dir);
}
