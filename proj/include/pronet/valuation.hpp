#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pronet/types.hpp"

namespace pronet {

struct ValuationConfig {
  // Divisor for annual -> daily conversion. The sector table and firm sales
  // are annual; the simulation runs on daily values.
  double days_per_year = 365.0;
};

// Two-step transaction-value estimation.
//
// Step 1 splits each supplier's annual sales across its customers in
// proportion to the customers' sales. Step 2 rescales the tentative values
// of every (supplier sector, customer sector) pair so their sum matches the
// sector table flow for that pair. Pairs with zero table flow produce
// zero-valued links, which are dropped.
//
// Suppliers whose customers all report zero sales split equally in step 1.
std::vector<SupplyLink> estimate_link_values(
    const std::vector<Firm>& firms,
    const std::vector<std::pair<std::string, std::string>>& edges, const IOTable& io,
    const ValuationConfig& config = {});

// Distributes each sector's annual final demand over the sector's firms
// using their sales as weights. A sector with positive demand but zero total
// sales cannot be allocated and is an error.
std::vector<FinalDemand> allocate_final_consumption(const std::vector<Firm>& firms,
                                                    const IOTable& io,
                                                    const ValuationConfig& config = {});

// Cross-references firms, links and final demand into a ValuedNetwork:
// firms sorted by id, links by (supplier, customer), baseline production
// cached per firm, zero-baseline firms flagged inert. Sector metadata
// (VA ratios, essential flags) is taken from `io` when given.
ValuedNetwork build_network(std::vector<Firm> firms, std::vector<SupplyLink> links,
                            const std::vector<FinalDemand>& final_demand,
                            const IOTable* io = nullptr, double days_per_year = 365.0);

}  // namespace pronet
