#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pronet/types.hpp"

namespace pronet {

struct FirmTable {
  std::vector<Firm> firms;
  std::size_t rows_read = 0;
  // Rows with an empty annual_sales field carry no usable sales figure and
  // are dropped, not loaded silently.
  std::size_t dropped_missing_sales = 0;
};

// firms.csv: header `firm_id,sector,region,annual_sales,lon,lat`.
// lon/lat columns are optional and their values may be empty.
// Duplicate ids, negative or non-numeric sales fail with the row number.
FirmTable load_firm_table(const std::filesystem::path& path);

struct LinkTable {
  std::vector<std::pair<std::string, std::string>> edges;  // (supplier, customer)
  std::size_t rows_read = 0;
  std::size_t dropped_dangling = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
};

// links.csv: header `supplier_id,customer_id`. Edges whose endpoints are not
// in the firm table are dropped and counted, mirroring how firms without
// sales data disappear from the analysis upstream.
LinkTable load_link_table(const std::filesystem::path& path, const std::vector<Firm>& firms);

// io.csv: square flow matrix with a sector header row and matching row
// labels, followed by a FINAL_DEMAND row and an optional VA_RATIO row.
IOTable load_io_table(const std::filesystem::path& path);

// One sector code per line; blank lines ignored.
std::vector<std::string> load_sector_list(const std::filesystem::path& path);

// Sectors exempt from a benchmark lockdown: wholesale, retail, utilities,
// transport, storage, communication, healthcare and welfare, by their codes
// in the 2015 Japanese IO classification.
const std::vector<std::string>& default_essential_sector_codes();

// Marks the given sectors essential, replacing any previous flags. With an
// empty explicit list the built-in default codes apply.
void apply_essential_sectors(IOTable& io, const std::vector<std::string>& codes);

}  // namespace pronet
