#ifndef TCLIQUE_TYPES_HPP
#define TCLIQUE_TYPES_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace tclique {

// Dense 0-based node label, assigned by degree-based relabeling at ingestion.
using NodeId = std::uint32_t;
// Discrete timestamps in the input's native unit; delta shares that unit.
using Timestamp = std::int64_t;
using Weight = double;

// Canonical key for an unordered node pair (smaller label first).
inline std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// A clique candidate: node set X, instance-bounded interval [t_b, t_e], and
// the inner border properties tb_max (earliest time by which gamma weight is
// reached from t_b) and te_min (latest time from which gamma weight still
// reaches t_e). The outer borders are derived, never stored independently.
struct CliqueRecord {
  std::vector<NodeId> nodes;  // sorted ascending, |nodes| >= 2
  Timestamp t_b = 0;
  Timestamp t_e = 0;
  Timestamp tb_max = 0;
  Timestamp te_min = 0;

  Timestamp tb_min(Timestamp delta) const { return tb_max - delta + 1; }
  Timestamp te_max(Timestamp delta) const { return te_min + delta - 1; }
  NodeId max_node() const { return nodes.back(); }

  friend bool operator==(const CliqueRecord&, const CliqueRecord&) = default;
};

// Identity hash over node set plus all four border timestamps. Two records
// with equal X but different intervals are distinct branches.
struct CliqueRecordHash {
  std::size_t operator()(const CliqueRecord& r) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (NodeId n : r.nodes) mix(n);
    mix(static_cast<std::uint64_t>(r.t_b));
    mix(static_cast<std::uint64_t>(r.t_e));
    mix(static_cast<std::uint64_t>(r.tb_max));
    mix(static_cast<std::uint64_t>(r.te_min));
    return h;
  }
};

// C.t_b is inside [C_dom.t_b, C_dom.t_e] on both sides (equal borders dominate).
inline bool is_temporally_dominated(const CliqueRecord& c, const CliqueRecord& dom) {
  return dom.t_b <= c.t_b && c.t_e <= dom.t_e;
}

}  // namespace tclique

#endif
