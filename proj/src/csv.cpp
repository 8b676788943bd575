#include "pronet/csv.hpp"

#include <algorithm>
#include <charconv>

namespace pronet {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

CsvReader::CsvReader(const std::filesystem::path& path)
    : in_(path), path_(path.string()) {
  if (!in_) throw LoadError("cannot open '" + path_ + "'");
  std::string line;
  if (!std::getline(in_, line)) throw LoadError("'" + path_ + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  header_ = split_csv_line(line);
  line_ = 1;
}

bool CsvReader::next(std::vector<std::string>& fields) {
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  fields = split_csv_line(line);
  return true;
}

std::size_t CsvReader::column(const std::string& name) const {
  auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) return npos;
  return static_cast<std::size_t>(it - header_.begin());
}

std::size_t CsvReader::require_column(const std::string& name) const {
  const std::size_t c = column(name);
  if (c == npos) throw LoadError("'" + path_ + "': missing column '" + name + "'");
  return c;
}

void CsvReader::fail(const std::string& what) const {
  throw LoadError("'" + path_ + "' row " + std::to_string(line_) + ": " + what);
}

double parse_csv_double(const std::string& field, const CsvReader& reader,
                        const std::string& column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    reader.fail("non-numeric value '" + field + "' in column '" + column + "'");
  }
  return value;
}

}  // namespace pronet
