#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tclique/network.hpp"
#include "tclique/stretch.hpp"
#include "tclique/types.hpp"

namespace testutil {

using tclique::CliqueRecord;
using tclique::EdgeTimeline;
using tclique::NodeId;
using tclique::TemporalNetwork;
using tclique::Timestamp;
using tclique::Weight;

struct Inst {
  std::string u, v;
  Timestamp t;
  Weight w = 1.0;
};

inline TemporalNetwork make_network(const std::vector<Inst>& insts) {
  std::vector<tclique::RawInstance> raw;
  for (const auto& i : insts) raw.push_back({i.u, i.v, i.t, i.w});
  return TemporalNetwork::from_instances(raw);
}

inline EdgeTimeline make_timeline(std::vector<Timestamp> times, std::vector<Weight> weights) {
  EdgeTimeline tl;
  tl.times = std::move(times);
  tl.weights = std::move(weights);
  tl.finalize();
  return tl;
}

// Fig.-2a-style single-edge data: times [1,5,7,9], weights [2,1,1,1].
inline EdgeTimeline burst_timeline_a() { return make_timeline({1, 5, 7, 9}, {2, 1, 1, 1}); }
// Fig.-2b-style: times [1,2,3,5,7,9], weights [1,1,2,1,1,1].
inline EdgeTimeline burst_timeline_b() {
  return make_timeline({1, 2, 3, 5, 7, 9}, {1, 1, 2, 1, 1, 1});
}

inline TemporalNetwork triangle_network() {
  return make_network({{"A", "B", 1}, {"A", "B", 4}, {"A", "C", 2}, {"A", "C", 5},
                       {"B", "C", 3}, {"B", "C", 6}});
}

// Projection used for set comparisons that ignore the inner borders.
using Proj = std::tuple<std::vector<NodeId>, Timestamp, Timestamp>;

inline std::vector<Proj> project(const std::vector<CliqueRecord>& recs) {
  std::vector<Proj> out;
  for (const auto& r : recs) out.push_back({r.nodes, r.t_b, r.t_e});
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Independent brute-force enumeration for one edge timeline ----
// Deliberately avoids the library's prefix sums and pointer logic: validity
// is evaluated by direct summation per window.

inline Weight brute_window_sum(const EdgeTimeline& tl, Timestamp lo, Timestamp hi) {
  Weight sum = 0;
  for (std::size_t i = 0; i < tl.times.size(); ++i)
    if (tl.times[i] >= lo && tl.times[i] <= hi) sum += tl.weights[i];
  return sum;
}

inline bool brute_interval_valid(const EdgeTimeline& tl, Timestamp tb, Timestamp te,
                                 Timestamp delta, Weight gamma) {
  if (te - tb + 1 < delta) return brute_window_sum(tl, tb, te) >= gamma;
  for (Timestamp tau = tb; tau <= te - delta + 1; ++tau)
    if (brute_window_sum(tl, tau, tau + delta - 1) < gamma) return false;
  return true;
}

struct BruteInterval {
  Timestamp t_b, tb_max, te_min, t_e;
  bool operator==(const BruteInterval&) const = default;
  bool operator<(const BruteInterval& o) const {
    return std::tie(t_b, t_e) < std::tie(o.t_b, o.t_e);
  }
};

// All duration-wise maximal valid instance-bounded intervals, with the inner
// borders recomputed from their definition: tb_max is the earliest instant by
// which gamma weight accumulates from t_b; te_min is the latest instant from
// which gamma weight is still reachable, via a full forward delta-window
// (which may extend past t_e, as it bounds growth of the end border) or the
// remainder of the interval.
inline std::vector<BruteInterval> brute_stretch(const EdgeTimeline& tl, Timestamp delta,
                                                Weight gamma) {
  const auto& ts = tl.times;
  std::vector<std::pair<Timestamp, Timestamp>> valid;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i; j < ts.size(); ++j)
      if (brute_interval_valid(tl, ts[i], ts[j], delta, gamma)) valid.push_back({ts[i], ts[j]});

  std::vector<BruteInterval> out;
  for (const auto& [tb, te] : valid) {
    bool enclosed = false;
    for (const auto& [tb2, te2] : valid)
      if (tb2 <= tb && te <= te2 && (tb2 < tb || te < te2)) enclosed = true;
    if (enclosed) continue;
    BruteInterval iv{tb, tb, te, te};
    Weight acc = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] < tb || ts[i] > te) continue;
      acc += tl.weights[i];
      if (acc >= gamma) {
        iv.tb_max = ts[i];
        break;
      }
    }
    for (std::size_t i = ts.size(); i-- > 0;) {
      if (ts[i] < tb || ts[i] > te) continue;
      if (brute_window_sum(tl, ts[i], ts[i] + delta - 1) >= gamma ||
          brute_window_sum(tl, ts[i], te) >= gamma) {
        iv.te_min = ts[i];
        break;
      }
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<BruteInterval> as_brute(const std::vector<tclique::StretchInterval>& ivs) {
  std::vector<BruteInterval> out;
  for (const auto& iv : ivs) out.push_back({iv.t_b, iv.tb_max, iv.te_min, iv.t_e});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil

#endif
