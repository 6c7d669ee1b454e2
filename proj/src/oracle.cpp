#include "tclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "tclique/stretch.hpp"

namespace tclique {

bool oracle_dominates(const CliqueRecord& c, const CliqueRecord& dom) {
  const bool encloses = dom.t_b <= c.t_b && c.t_e <= dom.t_e;
  if (!encloses) return false;
  if (c.nodes == dom.nodes) return dom.t_b < c.t_b || c.t_e < dom.t_e;
  return c.nodes.size() < dom.nodes.size() &&
         std::includes(dom.nodes.begin(), dom.nodes.end(), c.nodes.begin(), c.nodes.end());
}

std::vector<CliqueRecord> oracle_enumerate(const TemporalNetwork& network, Timestamp delta,
                                           Weight gamma, const OracleConfig& config) {
  if (network.node_count() > config.max_nodes)
    throw std::invalid_argument("exhaustive enumeration refused: node count exceeds cap");
  if (network.instance_count() > config.max_instances)
    throw std::invalid_argument("exhaustive enumeration refused: instance count exceeds cap");

  const std::size_t n = network.node_count();
  std::vector<CliqueRecord> kept;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) nodes.push_back(static_cast<NodeId>(i));

    // Candidate borders: instance timestamps of the subset's edges. A missing
    // static edge disqualifies the subset outright.
    std::set<Timestamp> stamps;
    bool connected = true;
    for (std::size_t i = 0; i < nodes.size() && connected; ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        const EdgeTimeline* tl = network.timeline(nodes[i], nodes[j]);
        if (!tl) {
          connected = false;
          break;
        }
        stamps.insert(tl->times.begin(), tl->times.end());
      }
    }
    if (!connected) continue;

    std::vector<Timestamp> ts(stamps.begin(), stamps.end());
    for (std::size_t bi = 0; bi < ts.size(); ++bi) {
      for (std::size_t ei = bi; ei < ts.size(); ++ei) {
        CliqueRecord rec;
        rec.nodes = nodes;
        rec.t_b = ts[bi];
        rec.t_e = ts[ei];
        rec.tb_max = rec.t_b;
        rec.te_min = rec.t_e;
        if (validate_record(network, delta, gamma, rec)) kept.push_back(std::move(rec));
      }
    }
  }

  std::vector<CliqueRecord> out;
  for (const auto& c : kept) {
    bool dominated = false;
    for (const auto& d : kept) {
      if (&c != &d && oracle_dominates(c, d)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  return out;
}

}  // namespace tclique
