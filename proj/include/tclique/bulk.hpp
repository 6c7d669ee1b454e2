#ifndef TCLIQUE_BULK_HPP
#define TCLIQUE_BULK_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <unordered_set>
#include <vector>

#include "tclique/network.hpp"
#include "tclique/stretch.hpp"
#include "tclique/types.hpp"

namespace tclique {

using RecordSet = std::unordered_set<CliqueRecord, CliqueRecordHash>;

// Accumulates the result set R, enforcing per-node-set maximality: a clique
// is identified by (X, t_b, t_e), so a record whose interval is enclosed by
// an already-held record over the same node set is dropped, and held records
// enclosed by an incoming one are evicted. Distinct recursion paths can reach
// the same interval with different derived borders; the first survives.
class ResultSink {
 public:
  void add(const CliqueRecord& rec);
  std::vector<CliqueRecord> cliques() const;
  std::size_t count() const;
  std::size_t max_cardinality() const;
  Timestamp max_duration() const;

 private:
  // Per node set: held intervals keyed by t_b (mutually non-enclosing, so
  // t_b and t_e are both strictly increasing along the map).
  std::map<std::vector<NodeId>, std::map<Timestamp, CliqueRecord>> by_nodes_;
};

struct BulkStats {
  std::uint64_t visited_states = 0;
  std::uint64_t pruned_branches = 0;
};

struct BulkOptions {
  bool prune = true;
  // Test hook: invoked once per visited recursion state with the seed index
  // and the state's record (node set plus interval borders).
  std::function<void(std::size_t seed_index, const CliqueRecord& state)> on_visit;
};

// One (C_u or C_v, combined 3-node record) result of the outer overlap.
struct OuterOverlapHit {
  const CliqueRecord* via_u;  // record over {u, n}
  const CliqueRecord* via_v;  // record over {v, n}
  CliqueRecord combined;
};

// Extends the 2-node record c over (u, v) to 3-node records over {u, v, n}
// by combining pairs of stretch records with sufficient interval overlap.
// Combined records failing the validity definition are discarded: the border
// arithmetic guarantees validity only for non-negative weights.
std::vector<OuterOverlapHit> outer_overlap(const TemporalNetwork& network,
                                           const StretchStore& store, const CliqueRecord& c,
                                           NodeId u, NodeId v, NodeId n, Timestamp delta,
                                           Weight gamma);

// Combines c with a sibling extension cp (|cp.X| == |c.X|, sharing all but
// one node) and each stretch record over the connecting pair into records
// over c.X union cp.X. Invalid combinations are discarded as above.
std::vector<CliqueRecord> inner_overlap(const TemporalNetwork& network, const StretchStore& store,
                                        const CliqueRecord& c, const CliqueRecord& cp,
                                        Timestamp delta, Weight gamma);

// Every potential extension node of cn is covered by ne, and cnew overlaps
// the minimum extension growth of the current state (the smallest outer
// borders among er).
bool is_spatial_growth_dominated(const TemporalNetwork& network, const CliqueRecord& cn,
                                 const std::vector<NodeId>& ne, const CliqueRecord& cnew,
                                 std::span<const CliqueRecord* const> er, Timestamp delta);

// No extension of cn can grow its interval beyond the minimum extension
// growth of the dominating state.
bool is_temporal_growth_dominated(const StretchStore& store, const CliqueRecord& cn,
                                  std::span<const CliqueRecord* const> er,
                                  const std::vector<NodeId>& nr,
                                  std::span<const CliqueRecord* const> cr,
                                  std::span<const CliqueRecord* const> cp, Timestamp delta);

// Recursively grows the node sets of the stretch records into the full set of
// (delta,gamma)-maximal cliques. Seeds found in the global cut set are
// skipped when pruning is enabled.
BulkStats bulk_phase(const TemporalNetwork& network, const StretchStore& store, Timestamp delta,
                     Weight gamma, ResultSink& sink, const BulkOptions& options = {});

}  // namespace tclique

#endif
