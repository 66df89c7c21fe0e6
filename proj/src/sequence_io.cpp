#include "ncnn/sequence_io.hpp"

#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ncnn/errors.hpp"

namespace ncnn {

namespace {

bool is_unsigned_integer(std::string_view text) {
  return !text.empty() && text.find_first_not_of("0123456789") == std::string_view::npos;
}

BigInt parse_value(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_unsigned_integer(digits)) {
    throw ValidationError("'" + std::string(text) + "' is not a decimal integer");
  }
  return BigInt(std::string(text), 10);
}

class TableBuilder {
 public:
  explicit TableBuilder(std::string name) { table_.name = std::move(name); }

  void push(std::string_view index_text, std::string_view value_text) {
    if (!is_unsigned_integer(index_text)) {
      throw ValidationError("bad index '" + std::string(index_text) + "'");
    }
    const std::size_t index = std::stoull(std::string(index_text));
    if (table_.values.empty()) {
      table_.offset = index;
    } else if (index != table_.last_index() + 1) {
      throw ValidationError("index " + std::to_string(index) + " does not follow " +
                            std::to_string(table_.last_index()));
    }
    table_.values.push_back(parse_value(value_text));
  }

  SequenceTable take() { return std::move(table_); }

 private:
  SequenceTable table_;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

TableFormat parse_table_format(std::string_view text) {
  if (text == "bfile") return TableFormat::BFile;
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  throw ValidationError("unknown format '" + std::string(text) + "' (expected bfile, csv or json)");
}

const char* table_format_name(TableFormat format) {
  switch (format) {
    case TableFormat::BFile:
      return "bfile";
    case TableFormat::Csv:
      return "csv";
    case TableFormat::Json:
      return "json";
  }
  return "?";
}

void write_bfile(const SequenceTable& table, std::ostream& out) {
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    out << table.offset + k << ' ' << table.values[k].get_str(10) << '\n';
  }
}

void write_csv(const SequenceTable& table, std::ostream& out) {
  out << "n,value\n";
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    out << table.offset + k << ',' << table.values[k].get_str(10) << '\n';
  }
}

void write_json(const SequenceTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["name"] = table.name;
  doc["offset"] = table.offset;
  doc["values"] = nlohmann::ordered_json::array();
  for (const BigInt& v : table.values) doc["values"].push_back(v.get_str(10));
  out << doc.dump() << '\n';
}

void write_table(const SequenceTable& table, TableFormat format, std::ostream& out) {
  switch (format) {
    case TableFormat::BFile:
      return write_bfile(table, out);
    case TableFormat::Csv:
      return write_csv(table, out);
    case TableFormat::Json:
      return write_json(table, out);
  }
}

SequenceTable read_bfile(std::istream& in, std::string name) {
  TableBuilder builder(std::move(name));
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view text = strip(line);
    if (text.empty() || text.front() == '#') continue;
    const std::size_t space = text.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ValidationError("b-file line '" + std::string(text) + "' lacks a value");
    }
    builder.push(text.substr(0, space), strip(text.substr(space + 1)));
  }
  return builder.take();
}

SequenceTable read_csv(std::istream& in, std::string name) {
  TableBuilder builder(std::move(name));
  std::string line;
  if (!std::getline(in, line) || strip(line) != "n,value") {
    throw ValidationError("CSV header must be 'n,value'");
  }
  while (std::getline(in, line)) {
    const std::string_view text = strip(line);
    if (text.empty()) continue;
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
      throw ValidationError("CSV line '" + std::string(text) + "' lacks a value");
    }
    builder.push(strip(text.substr(0, comma)), strip(text.substr(comma + 1)));
  }
  return builder.take();
}

SequenceTable read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
    SequenceTable table;
    table.name = doc.at("name").get<std::string>();
    table.offset = doc.at("offset").get<std::size_t>();
    for (const auto& v : doc.at("values")) table.values.push_back(parse_value(v.get<std::string>()));
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed sequence JSON: ") + e.what());
  }
}

SequenceTable read_table(std::istream& in, TableFormat format, std::string name) {
  switch (format) {
    case TableFormat::BFile:
      return read_bfile(in, std::move(name));
    case TableFormat::Csv:
      return read_csv(in, std::move(name));
    case TableFormat::Json:
      return read_json(in);
  }
  throw ValidationError("unknown format");
}

void export_table(const SequenceTable& table, TableFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_table(table, format, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

SequenceTable import_table(const std::filesystem::path& path, TableFormat format, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_table(in, format, std::move(name));
}

}  // namespace ncnn
