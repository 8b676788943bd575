#include "pronet/load.hpp"

#include <unordered_set>

#include "pronet/csv.hpp"

namespace pronet {

void IOTable::rebuild_index() {
  index.clear();
  for (std::size_t s = 0; s < sectors.size(); ++s) index[sectors[s]] = s;
}

IOTable IOTable::with_sectors(std::vector<std::string> codes) {
  IOTable io;
  io.sectors = std::move(codes);
  io.flows.assign(io.sectors.size() * io.sectors.size(), 0.0);
  io.final_demand.assign(io.sectors.size(), 0.0);
  io.va_ratio.assign(io.sectors.size(), 1.0);
  io.essential.assign(io.sectors.size(), 0);
  io.rebuild_index();
  return io;
}

void IOTable::validate() const {
  if (index.size() != sectors.size()) throw LoadError("io table: duplicate sector codes");
  for (double f : flows) {
    if (!(f >= 0.0)) throw LoadError("io table: negative or non-finite flow entry");
  }
  for (double f : final_demand) {
    if (!(f >= 0.0)) throw LoadError("io table: negative or non-finite final demand");
  }
  for (double v : va_ratio) {
    if (!(v >= 0.0 && v <= 1.0)) throw LoadError("io table: VA ratio outside [0,1]");
  }
}

FirmTable load_firm_table(const std::filesystem::path& path) {
  CsvReader reader(path);
  const std::size_t c_id = reader.require_column("firm_id");
  const std::size_t c_sector = reader.require_column("sector");
  const std::size_t c_region = reader.require_column("region");
  const std::size_t c_sales = reader.require_column("annual_sales");
  const std::size_t c_lon = reader.column("lon");
  const std::size_t c_lat = reader.column("lat");

  FirmTable table;
  std::unordered_set<std::string> seen;
  std::vector<std::string> row;
  while (reader.next(row)) {
    ++table.rows_read;
    if (row.size() <= c_sales) reader.fail("too few fields");
    Firm firm;
    firm.id = row[c_id];
    firm.sector = row[c_sector];
    firm.region = row[c_region];
    if (firm.id.empty()) reader.fail("empty firm_id");
    if (!seen.insert(firm.id).second) reader.fail("duplicate firm id '" + firm.id + "'");
    if (row[c_sales].empty()) {
      ++table.dropped_missing_sales;
      continue;
    }
    firm.annual_sales = parse_csv_double(row[c_sales], reader, "annual_sales");
    if (firm.annual_sales < 0.0) reader.fail("negative annual_sales");
    if (c_lon != CsvReader::npos && c_lon < row.size() && !row[c_lon].empty()) {
      firm.lon = parse_csv_double(row[c_lon], reader, "lon");
    }
    if (c_lat != CsvReader::npos && c_lat < row.size() && !row[c_lat].empty()) {
      firm.lat = parse_csv_double(row[c_lat], reader, "lat");
    }
    table.firms.push_back(std::move(firm));
  }
  return table;
}

LinkTable load_link_table(const std::filesystem::path& path, const std::vector<Firm>& firms) {
  CsvReader reader(path);
  const std::size_t c_sup = reader.require_column("supplier_id");
  const std::size_t c_cus = reader.require_column("customer_id");

  std::unordered_set<std::string> known;
  known.reserve(firms.size());
  for (const Firm& f : firms) known.insert(f.id);

  LinkTable table;
  std::unordered_set<std::string> seen_pairs;
  std::vector<std::string> row;
  while (reader.next(row)) {
    ++table.rows_read;
    if (row.size() <= std::max(c_sup, c_cus)) reader.fail("too few fields");
    const std::string& supplier = row[c_sup];
    const std::string& customer = row[c_cus];
    if (supplier == customer) {
      ++table.dropped_self_loops;
      continue;
    }
    if (!known.count(supplier) || !known.count(customer)) {
      ++table.dropped_dangling;
      continue;
    }
    if (!seen_pairs.insert(supplier + '\x1f' + customer).second) {
      ++table.dropped_duplicates;
      continue;
    }
    table.edges.emplace_back(supplier, customer);
  }
  return table;
}

IOTable load_io_table(const std::filesystem::path& path) {
  CsvReader reader(path);
  const auto& header = reader.header();
  if (header.size() < 2) throw LoadError("'" + path.string() + "': io table needs sector columns");

  std::vector<std::string> codes(header.begin() + 1, header.end());
  IOTable io = IOTable::with_sectors(std::move(codes));
  if (io.index.size() != io.n()) throw LoadError("'" + path.string() + "': duplicate sector codes");

  const std::size_t n = io.n();
  std::vector<std::string> row;
  std::size_t flow_rows = 0;
  bool saw_final_demand = false;
  while (reader.next(row)) {
    if (row.empty() || (row.size() == 1 && row[0].empty())) continue;
    if (row.size() != n + 1) reader.fail("expected " + std::to_string(n + 1) + " fields");
    const std::string& label = row[0];
    if (label == "FINAL_DEMAND") {
      for (std::size_t s = 0; s < n; ++s) {
        io.final_demand[s] = parse_csv_double(row[s + 1], reader, io.sectors[s]);
      }
      saw_final_demand = true;
    } else if (label == "VA_RATIO") {
      for (std::size_t s = 0; s < n; ++s) {
        io.va_ratio[s] = parse_csv_double(row[s + 1], reader, io.sectors[s]);
      }
    } else {
      if (flow_rows >= n) reader.fail("unexpected extra row '" + label + "'");
      if (label != io.sectors[flow_rows]) {
        reader.fail("row label '" + label + "' does not match header order (expected '" +
                    io.sectors[flow_rows] + "')");
      }
      for (std::size_t s = 0; s < n; ++s) {
        io.flow(flow_rows, s) = parse_csv_double(row[s + 1], reader, io.sectors[s]);
      }
      ++flow_rows;
    }
  }
  if (flow_rows != n) {
    throw LoadError("'" + path.string() + "': expected " + std::to_string(n) +
                    " flow rows, found " + std::to_string(flow_rows));
  }
  if (!saw_final_demand) throw LoadError("'" + path.string() + "': missing FINAL_DEMAND row");
  apply_essential_sectors(io, {});
  io.validate();
  return io;
}

std::vector<std::string> load_sector_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open '" + path.string() + "'");
  std::vector<std::string> codes;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) codes.push_back(line);
  }
  return codes;
}

const std::vector<std::string>& default_essential_sector_codes() {
  static const std::vector<std::string> codes = {
      "4611", "4621", "4622", "4711", "4811", "5111", "5112", "5711", "5712", "5721",
      "5722", "5741", "5742", "5743", "5761", "5771", "5781", "5789", "5791", "5911",
      "5921", "5931", "5941", "5951", "6411", "6421", "6431", "6441"};
  return codes;
}

void apply_essential_sectors(IOTable& io, const std::vector<std::string>& codes) {
  const std::vector<std::string>& effective =
      codes.empty() ? default_essential_sector_codes() : codes;
  std::fill(io.essential.begin(), io.essential.end(), 0);
  for (const std::string& code : effective) {
    if (auto s = io.sector_id(code)) io.essential[*s] = 1;
  }
}

}  // namespace pronet
