#include "pronet/valuation.hpp"

#include <algorithm>
#include <unordered_map>

namespace pronet {

namespace {

std::unordered_map<std::string, std::size_t> index_firms(const std::vector<Firm>& firms) {
  std::unordered_map<std::string, std::size_t> idx;
  idx.reserve(firms.size());
  for (std::size_t i = 0; i < firms.size(); ++i) {
    if (!idx.emplace(firms[i].id, i).second) {
      throw BuildError("duplicate firm id '" + firms[i].id + "'");
    }
  }
  return idx;
}

}  // namespace

std::vector<SupplyLink> estimate_link_values(
    const std::vector<Firm>& firms,
    const std::vector<std::pair<std::string, std::string>>& edges, const IOTable& io,
    const ValuationConfig& config) {
  if (config.days_per_year <= 0.0) throw Error("days_per_year must be positive");
  const auto firm_at = index_firms(firms);

  std::vector<std::size_t> sector_of(firms.size());
  for (std::size_t i = 0; i < firms.size(); ++i) {
    const auto s = io.sector_id(firms[i].sector);
    if (!s) {
      throw BuildError("firm '" + firms[i].id + "': sector '" + firms[i].sector +
                       "' not in io table");
    }
    sector_of[i] = *s;
  }

  struct Edge {
    std::size_t supplier;
    std::size_t customer;
    double tentative = 0.0;
  };
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [sup, cus] : edges) {
    auto is = firm_at.find(sup);
    auto ic = firm_at.find(cus);
    if (is == firm_at.end() || ic == firm_at.end()) {
      throw BuildError("edge (" + sup + ", " + cus + ") references an unknown firm");
    }
    if (is->second == ic->second) throw BuildError("self loop on firm '" + sup + "'");
    resolved.push_back({is->second, ic->second, 0.0});
  }

  // Canonical edge order; all aggregation below follows it, so outputs are
  // bit-stable no matter how the edge list arrived.
  std::sort(resolved.begin(), resolved.end(), [&](const Edge& a, const Edge& b) {
    if (firms[a.supplier].id != firms[b.supplier].id)
      return firms[a.supplier].id < firms[b.supplier].id;
    return firms[a.customer].id < firms[b.customer].id;
  });

  // Step 1: each supplier's sales split over customers by customer sales.
  std::vector<double> customer_sales_total(firms.size(), 0.0);
  std::vector<std::size_t> customer_count(firms.size(), 0);
  for (const Edge& e : resolved) {
    customer_sales_total[e.supplier] += firms[e.customer].annual_sales;
    customer_count[e.supplier] += 1;
  }
  for (Edge& e : resolved) {
    const double supplier_sales = firms[e.supplier].annual_sales;
    const double total = customer_sales_total[e.supplier];
    if (total > 0.0) {
      e.tentative = supplier_sales * firms[e.customer].annual_sales / total;
    } else {
      // All customers report zero sales; split equally instead of 0/0.
      e.tentative = supplier_sales / static_cast<double>(customer_count[e.supplier]);
    }
  }

  // Step 2: rescale each sector pair to its table flow.
  const std::size_t n = io.n();
  std::vector<double> pair_tentative(n * n, 0.0);
  for (const Edge& e : resolved) {
    pair_tentative[sector_of[e.supplier] * n + sector_of[e.customer]] += e.tentative;
  }
  std::vector<double> pair_factor(n * n, 0.0);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (pair_tentative[p] > 0.0 && io.flows[p] > 0.0) {
      pair_factor[p] = io.flows[p] / pair_tentative[p];
    }
  }

  std::vector<SupplyLink> links;
  links.reserve(resolved.size());
  for (const Edge& e : resolved) {
    const double annual =
        e.tentative * pair_factor[sector_of[e.supplier] * n + sector_of[e.customer]];
    if (annual <= 0.0) continue;  // zero table flow or zero tentative: dropped
    links.push_back(
        {firms[e.supplier].id, firms[e.customer].id, annual / config.days_per_year});
  }
  return links;
}

std::vector<FinalDemand> allocate_final_consumption(const std::vector<Firm>& firms,
                                                    const IOTable& io,
                                                    const ValuationConfig& config) {
  if (config.days_per_year <= 0.0) throw Error("days_per_year must be positive");

  std::vector<std::size_t> order(firms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return firms[a].id < firms[b].id; });

  std::vector<std::size_t> sector_of(firms.size());
  std::vector<double> sector_sales(io.n(), 0.0);
  for (std::size_t i : order) {
    const auto s = io.sector_id(firms[i].sector);
    if (!s) {
      throw BuildError("firm '" + firms[i].id + "': sector '" + firms[i].sector +
                       "' not in io table");
    }
    sector_of[i] = *s;
    sector_sales[*s] += firms[i].annual_sales;
  }

  for (std::size_t s = 0; s < io.n(); ++s) {
    if (io.final_demand[s] > 0.0 && sector_sales[s] <= 0.0) {
      throw Error("sector '" + io.sectors[s] +
                  "' has final demand but no firm sales to allocate it over");
    }
  }

  std::vector<FinalDemand> result;
  result.reserve(firms.size());
  for (std::size_t i : order) {
    const std::size_t s = sector_of[i];
    double daily = 0.0;
    if (io.final_demand[s] > 0.0) {
      daily = io.final_demand[s] * firms[i].annual_sales / sector_sales[s] /
              config.days_per_year;
    }
    result.push_back({firms[i].id, daily});
  }
  return result;
}

bool ValuedNetwork::va_is_gross_output() const {
  for (const SectorInfo& s : sector_info) {
    if (s.va_ratio != 1.0) return false;
  }
  return true;
}

ValuedNetwork build_network(std::vector<Firm> firms, std::vector<SupplyLink> links,
                            const std::vector<FinalDemand>& final_demand, const IOTable* io,
                            double days_per_year) {
  ValuedNetwork net;
  net.days_per_year = days_per_year;

  std::sort(firms.begin(), firms.end(),
            [](const Firm& a, const Firm& b) { return a.id < b.id; });
  net.firms = std::move(firms);
  net.firm_index.reserve(net.firms.size());
  for (std::uint32_t i = 0; i < net.firms.size(); ++i) {
    if (!net.firm_index.emplace(net.firms[i].id, i).second) {
      throw BuildError("duplicate firm id '" + net.firms[i].id + "'");
    }
  }

  // Sector table: from the io table when given, otherwise from observed firm
  // sectors with default metadata.
  if (io != nullptr) {
    net.sector_codes = io->sectors;
    net.sector_info.resize(io->n());
    for (std::size_t s = 0; s < io->n(); ++s) {
      net.sector_info[s].va_ratio = io->va_ratio[s];
      net.sector_info[s].essential = io->essential[s] != 0;
    }
  } else {
    for (const Firm& f : net.firms) {
      if (std::find(net.sector_codes.begin(), net.sector_codes.end(), f.sector) ==
          net.sector_codes.end()) {
        net.sector_codes.push_back(f.sector);
      }
    }
    std::sort(net.sector_codes.begin(), net.sector_codes.end());
    net.sector_info.assign(net.sector_codes.size(), SectorInfo{});
  }
  std::unordered_map<std::string, std::uint32_t> sector_index;
  for (std::uint32_t s = 0; s < net.sector_codes.size(); ++s) {
    sector_index[net.sector_codes[s]] = s;
  }
  net.firm_sector.resize(net.firms.size());
  for (std::uint32_t i = 0; i < net.firms.size(); ++i) {
    auto it = sector_index.find(net.firms[i].sector);
    if (it == sector_index.end()) {
      throw BuildError("firm '" + net.firms[i].id + "': sector '" + net.firms[i].sector +
                       "' not in sector table");
    }
    net.firm_sector[i] = it->second;
  }

  std::sort(links.begin(), links.end(), [](const SupplyLink& a, const SupplyLink& b) {
    if (a.supplier != b.supplier) return a.supplier < b.supplier;
    return a.customer < b.customer;
  });
  net.links = std::move(links);
  net.link_supplier.resize(net.links.size());
  net.link_customer.resize(net.links.size());
  for (std::size_t l = 0; l < net.links.size(); ++l) {
    const SupplyLink& link = net.links[l];
    if (!(link.daily_value > 0.0)) {
      throw BuildError("link (" + link.supplier + ", " + link.customer +
                       ") has non-positive value");
    }
    if (link.supplier == link.customer) {
      throw BuildError("self loop on firm '" + link.supplier + "'");
    }
    if (l > 0 && net.links[l - 1].supplier == link.supplier &&
        net.links[l - 1].customer == link.customer) {
      throw BuildError("duplicate link (" + link.supplier + ", " + link.customer + ")");
    }
    net.link_supplier[l] = net.index_of(link.supplier);
    net.link_customer[l] = net.index_of(link.customer);
  }

  net.final_demand_daily.assign(net.firms.size(), 0.0);
  for (const FinalDemand& fd : final_demand) {
    if (fd.daily_value < 0.0) {
      throw BuildError("negative final demand for firm '" + fd.firm + "'");
    }
    net.final_demand_daily[net.index_of(fd.firm)] += fd.daily_value;
  }

  // Baseline production: deliveries to customers plus final demand, summed
  // in link order.
  net.baseline_production.assign(net.firms.size(), 0.0);
  for (std::size_t l = 0; l < net.links.size(); ++l) {
    net.baseline_production[net.link_supplier[l]] += net.links[l].daily_value;
  }
  net.inert.assign(net.firms.size(), 0);
  for (std::size_t i = 0; i < net.firms.size(); ++i) {
    net.baseline_production[i] += net.final_demand_daily[i];
    net.inert[i] = net.baseline_production[i] == 0.0 ? 1 : 0;
  }
  return net;
}

}  // namespace pronet
