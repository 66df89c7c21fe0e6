#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ncnn/recurrences.hpp"

namespace ncnn {

enum class TableFormat { BFile, Csv, Json };

/// "bfile", "csv" or "json".
TableFormat parse_table_format(std::string_view text);
const char* table_format_name(TableFormat format);

// b-file: one "n a(n)" line per entry, no header, newline-terminated.
void write_bfile(const SequenceTable& table, std::ostream& out);
// CSV: header "n,value".
void write_csv(const SequenceTable& table, std::ostream& out);
// JSON: {"name": ..., "offset": ..., "values": ["1", ...]}.
void write_json(const SequenceTable& table, std::ostream& out);
void write_table(const SequenceTable& table, TableFormat format, std::ostream& out);

/// Readers validate consecutive indices and throw ValidationError on
/// malformed input. b-files may carry '#' comment lines.
SequenceTable read_bfile(std::istream& in, std::string name);
SequenceTable read_csv(std::istream& in, std::string name);
SequenceTable read_json(std::istream& in);
SequenceTable read_table(std::istream& in, TableFormat format, std::string name);

/// Throws IoError when the file cannot be written.
void export_table(const SequenceTable& table, TableFormat format, const std::filesystem::path& path);
SequenceTable import_table(const std::filesystem::path& path, TableFormat format, std::string name);

}  // namespace ncnn
