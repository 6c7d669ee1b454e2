#ifndef TCLIQUE_ORACLE_HPP
#define TCLIQUE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "tclique/network.hpp"
#include "tclique/types.hpp"

namespace tclique {

struct OracleConfig {
  std::size_t max_nodes = 10;
  std::size_t max_instances = 80;
};

// Exhaustive enumeration straight from the clique and maximality definitions:
// every node subset with complete static connectivity, every interval whose
// borders are instance timestamps of the subset's edges, validity-checked and
// then pairwise maximality-filtered. Only nodes/t_b/t_e of the returned
// records are meaningful (tb_max/te_min are set to t_b/t_e).
// Throws std::invalid_argument when the network exceeds the config caps.
std::vector<CliqueRecord> oracle_enumerate(const TemporalNetwork& network, Timestamp delta,
                                           Weight gamma, const OracleConfig& config = {});

// True when dom makes c non-maximal: a proper superset with an enclosing
// interval, or the same node set with a strictly larger interval.
bool oracle_dominates(const CliqueRecord& c, const CliqueRecord& dom);

}  // namespace tclique

#endif
