#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pronet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input files could not be parsed or violate a documented invariant.
struct LoadError : Error {
  using Error::Error;
};

// Cross-referencing the network pieces failed.
struct BuildError : Error {
  using Error::Error;
};

struct Firm {
  std::string id;
  std::string sector;
  std::string region;
  double annual_sales = 0.0;  // currency/year
  std::optional<double> lon;
  std::optional<double> lat;

  bool operator==(const Firm&) const = default;
};

// Directed supplier -> customer trade relation carrying the estimated
// pre-shock daily transaction value.
struct SupplyLink {
  std::string supplier;
  std::string customer;
  double daily_value = 0.0;  // currency/day

  bool operator==(const SupplyLink&) const = default;
};

struct FinalDemand {
  std::string firm;
  double daily_value = 0.0;  // currency/day

  bool operator==(const FinalDemand&) const = default;
};

struct SectorInfo {
  double va_ratio = 1.0;  // value added per unit of gross output, [0,1]
  bool essential = false;

  bool operator==(const SectorInfo&) const = default;
};

// Sector-level transaction table: annual flows between sectors plus each
// sector's annual final demand.
struct IOTable {
  std::vector<std::string> sectors;
  std::vector<double> flows;         // row-major [supplier_sector * n + customer_sector]
  std::vector<double> final_demand;  // per sector
  std::vector<double> va_ratio;      // per sector
  std::vector<char> essential;       // per sector
  std::unordered_map<std::string, std::size_t> index;

  std::size_t n() const { return sectors.size(); }

  double flow(std::size_t from, std::size_t to) const { return flows[from * n() + to]; }
  double& flow(std::size_t from, std::size_t to) { return flows[from * n() + to]; }

  std::optional<std::size_t> sector_id(const std::string& code) const {
    auto it = index.find(code);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  static IOTable with_sectors(std::vector<std::string> codes);

  void rebuild_index();
  void validate() const;  // throws LoadError on invariant violations
};

// Fully cross-referenced supply-chain network. Firms are sorted by id and
// links by (supplier, customer); every derived quantity is computed in that
// canonical order so identical inputs always produce identical bytes.
struct ValuedNetwork {
  std::vector<Firm> firms;
  std::vector<SupplyLink> links;
  std::vector<double> final_demand_daily;  // per firm, C_i

  std::vector<std::string> sector_codes;
  std::vector<SectorInfo> sector_info;
  std::vector<std::uint32_t> firm_sector;  // firm index -> sector index

  std::vector<std::uint32_t> link_supplier;  // per link, firm indices
  std::vector<std::uint32_t> link_customer;

  // Pre-shock daily production: deliveries to customers plus final demand.
  std::vector<double> baseline_production;
  // Firms with zero baseline never produce, never order, never constrain.
  std::vector<char> inert;

  std::unordered_map<std::string, std::uint32_t> firm_index;
  double days_per_year = 365.0;

  std::size_t n_firms() const { return firms.size(); }
  std::size_t n_links() const { return links.size(); }

  std::uint32_t index_of(const std::string& id) const {
    auto it = firm_index.find(id);
    if (it == firm_index.end()) throw BuildError("unknown firm id '" + id + "'");
    return it->second;
  }

  const SectorInfo& sector_of_firm(std::uint32_t f) const { return sector_info[firm_sector[f]]; }
  double va_of_firm(std::uint32_t f) const { return sector_info[firm_sector[f]].va_ratio; }

  // True when every sector still carries the default ratio of 1, i.e. losses
  // are reported in gross-output terms.
  bool va_is_gross_output() const;

  bool operator==(const ValuedNetwork& other) const {
    return firms == other.firms && links == other.links &&
           final_demand_daily == other.final_demand_daily &&
           sector_codes == other.sector_codes && sector_info == other.sector_info &&
           days_per_year == other.days_per_year;
  }
};

}  // namespace pronet
