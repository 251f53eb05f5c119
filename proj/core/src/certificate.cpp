#include "blocksieve/certificate.hpp"

#include <algorithm>

#include "blocksieve/block_json.hpp"

namespace blocksieve {

std::string_view to_string(Verdict v) {
  return v == Verdict::Feasible ? "feasible" : "infeasible";
}

std::string Certificate::closing_summary() const {
  if (feasible()) return "witness found";
  if (!reason.empty()) return reason;
  std::vector<std::pair<std::string, std::uint64_t>> items(
      stats.closures.begin(), stats.closures.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out;
  for (const auto& [name, count] : items) {
    if (!out.empty()) out += " ";
    out += name + "x" + std::to_string(count);
  }
  return out.empty() ? "empty search space" : out;
}

namespace {

nlohmann::ordered_json closures_to_json(const ClosureCounts& counts) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, count] : counts) out[name] = count;
  return out;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json out;
  out["verdict"] = std::string(to_string(c.verdict));
  out["target_dim"] = c.target_dim;
  out["group_order"] = c.group_order;
  out["regime"] = c.regime;
  if (c.witness) out["witness"] = block_system_to_json(*c.witness);
  nlohmann::ordered_json stats;
  stats["nodes"] = c.stats.nodes;
  stats["leaves"] = c.stats.leaves;
  stats["cases"] = c.stats.cases;
  stats["closures"] = closures_to_json(c.stats.closures);
  out["stats"] = std::move(stats);
  if (!c.feasible()) {
    auto trace = nlohmann::ordered_json::array();
    if (!c.reason.empty()) {
      trace.push_back({{"case", "all"}, {"closed_by", c.reason}});
    }
    for (const auto& t : c.refutation) {
      nlohmann::ordered_json line;
      line["case"] = t.label;
      line["closed_by"] = t.closed_by;
      line["nodes"] = t.nodes;
      line["closures"] = closures_to_json(t.closures);
      trace.push_back(std::move(line));
    }
    if (c.omitted_cases > 0) {
      trace.push_back({{"case", "..."},
                       {"omitted", c.omitted_cases}});
    }
    out["refutation"] = std::move(trace);
  }
  return out;
}

}  // namespace blocksieve
