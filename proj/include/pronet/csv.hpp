#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pronet/types.hpp"

namespace pronet {

// Line-oriented CSV reader for the project's ingest formats. Fields are split
// on bare commas; identifiers and codes must not contain commas or quotes.
class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& path);

  const std::vector<std::string>& header() const { return header_; }

  // Reads the next data row. Returns false at end of file.
  bool next(std::vector<std::string>& fields);

  // 1-based line number of the row most recently returned (header is line 1).
  std::size_t line() const { return line_; }

  const std::string& path() const { return path_; }

  // Column position by header name, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t column(const std::string& name) const;
  std::size_t require_column(const std::string& name) const;

  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::ifstream in_;
  std::string path_;
  std::vector<std::string> header_;
  std::size_t line_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);

double parse_csv_double(const std::string& field, const CsvReader& reader,
                        const std::string& column);

}  // namespace pronet
