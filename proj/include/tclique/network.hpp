#ifndef TCLIQUE_NETWORK_HPP
#define TCLIQUE_NETWORK_HPP

#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tclique/types.hpp"

namespace tclique {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One weighted temporal edge instance (t, u, v, w) before relabeling.
struct RawInstance {
  std::string u;
  std::string v;
  Timestamp t = 0;
  Weight w = 1.0;
};

// Time-ordered instance times and weights of one static edge, with prefix-sum
// and binary-search access. Times are strictly increasing: same-timestamp
// duplicates are merged at ingestion by summing weights.
struct EdgeTimeline {
  std::vector<Timestamp> times;
  std::vector<Weight> weights;
  std::vector<Weight> prefix;  // prefix[i] = sum of weights[0..i)
  Weight total_weight = 0;

  std::size_t size() const { return times.size(); }

  void finalize();

  // Cumulative weight of instances with lo <= t <= hi; 0 when none in range.
  Weight window_weight(Timestamp lo, Timestamp hi) const;

  // Smallest instance time >= bound, if any. O(log k).
  std::optional<Timestamp> earliest_at_or_after(Timestamp bound) const;
  // Largest instance time <= bound, if any. O(log k).
  std::optional<Timestamp> latest_at_or_before(Timestamp bound) const;
};

// Label assignment by ascending static neighbor count, ties broken by
// ascending first-seen order (the index into `neighbor_counts`).
// Returns labels[raw_index] = NodeId.
std::vector<NodeId> relabel_by_degree(const std::vector<std::size_t>& neighbor_counts);

enum class ColumnOrder { uvt, uvtw, tuv, tuvw };

struct IngestOptions {
  ColumnOrder columns = ColumnOrder::uvt;
};

// Immutable after construction; safe for shared read-only access.
class TemporalNetwork {
 public:
  // Builds a network from raw instances: drops self-loops, interns node
  // names, relabels by degree, merges same-(u,v,t) instances.
  // Throws ParseError if no instances survive.
  static TemporalNetwork from_instances(const std::vector<RawInstance>& instances);

  std::size_t node_count() const { return adjacency_.size(); }
  // True when any merged instance weight is negative; several cumulative-
  // weight shortcuts are only sound without negative weights.
  bool has_negative_weights() const { return has_negative_; }
  std::size_t instance_count() const { return instance_count_; }
  Timestamp t_min() const { return t_min_; }
  Timestamp t_max() const { return t_max_; }

  const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency_[u]; }
  // nullptr when the pair has no static edge.
  const EdgeTimeline* timeline(NodeId u, NodeId v) const;
  // Canonical (u < v) pairs in lexicographic order.
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

  const std::string& name(NodeId u) const { return names_[u]; }

  // Sorted-adjacency intersection over all nodes in `nodes`.
  std::vector<NodeId> shared_neighbors(std::span<const NodeId> nodes) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::unordered_map<std::uint64_t, EdgeTimeline> timelines_;
  std::vector<std::string> names_;
  std::size_t instance_count_ = 0;
  Timestamp t_min_ = 0;
  Timestamp t_max_ = 0;
  bool has_negative_ = false;
};

// Parses a line-oriented stream of "u v t [w]" records (order per options).
// Lines starting with '#' or '%' are ignored. Malformed lines raise
// ParseError with the line number; an empty network raises ParseError.
TemporalNetwork ingest(std::istream& source, const IngestOptions& options = {});

}  // namespace tclique

#endif
