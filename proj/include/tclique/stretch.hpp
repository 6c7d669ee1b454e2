#ifndef TCLIQUE_STRETCH_HPP
#define TCLIQUE_STRETCH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tclique/network.hpp"
#include "tclique/types.hpp"

namespace tclique {

// Interval borders of one 2-node duration-wise maximal clique.
struct StretchInterval {
  Timestamp t_b = 0;
  Timestamp tb_max = 0;
  Timestamp te_min = 0;
  Timestamp t_e = 0;

  friend bool operator==(const StretchInterval&, const StretchInterval&) = default;
};

struct EdgeStretchStats {
  // Net forward movement of the begin/end cursors (increments minus the one
  // rollback per restart); bounded by 2x the timeline length.
  std::uint64_t pointer_advances = 0;
  // True when the negative-weight cross-check replaced the two-pointer result.
  bool fallback_engaged = false;
};

struct StretchStats {
  std::uint64_t pointer_advances = 0;
  std::uint64_t edges_processed = 0;
  std::uint64_t edges_skipped_weight = 0;  // total weight below gamma
  std::uint64_t fallback_engaged = 0;      // negative-weight edges rescued by brute force
  std::uint64_t work_bound_violations = 0; // advances > 2k on a non-fallback edge
};

// All 2-node duration-wise maximal cliques, indexed by canonical node pair.
// Per pair, records are sorted by strictly increasing t_b (and t_e).
class StretchStore {
 public:
  void add(NodeId u, NodeId v, CliqueRecord rec);
  const std::vector<CliqueRecord>& records(NodeId u, NodeId v) const;
  std::size_t size() const { return total_; }
  bool empty() const { return total_ == 0; }

  // All records ordered by increasing max(X), then min node, then t_b;
  // the seed processing order of the bulking phase.
  std::vector<const CliqueRecord*> ordered_seeds() const;

 private:
  std::unordered_map<std::uint64_t, std::vector<CliqueRecord>> by_pair_;
  std::size_t total_ = 0;
};

// Two-pointer enumeration of all duration-wise maximal (delta,gamma)-valid
// intervals of one edge, in ascending t_b order. Timelines containing a
// negative weight are cross-checked against a quadratic enumeration; on
// disagreement the quadratic result wins and the stats flag is set.
// Requires timeline.total_weight >= gamma.
std::vector<StretchInterval> stretch_edge(const EdgeTimeline& timeline, Timestamp delta,
                                          Weight gamma, EdgeStretchStats* stats = nullptr);

// Exhaustive per-edge enumeration straight from the validity definition;
// the in-library fallback for negative-weight timelines.
std::vector<StretchInterval> stretch_edge_quadratic(const EdgeTimeline& timeline,
                                                    Timestamp delta, Weight gamma);

// Runs stretch_edge over every static edge whose total weight reaches gamma.
// Throws std::invalid_argument when delta < 1.
StretchStore stretch_phase(const TemporalNetwork& network, Timestamp delta, Weight gamma,
                           StretchStats* stats = nullptr);

// Direct evaluation of the clique validity definition: every node pair of
// record.nodes reaches gamma weight in every delta-window anchored in
// [t_b, t_e - delta + 1] (the single window [t_b, t_e] when the interval is
// shorter than delta), and some instance of the clique's edges occurs at both
// t_b and t_e. Only record.nodes/t_b/t_e are consulted.
bool validate_record(const TemporalNetwork& network, Timestamp delta, Weight gamma,
                     const CliqueRecord& record);

}  // namespace tclique

#endif
