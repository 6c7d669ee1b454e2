#include "tclique/stretch.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace tclique {

namespace {

// Minimum of f([tau, tau + delta - 1]) over tau in [lo, hi]. The window
// weight is a step function of tau changing only at ts[x]+1 (instance leaves)
// and ts[x]-delta+1 (instance enters), so sampling those anchors suffices.
Weight min_window_weight(const EdgeTimeline& tl, Timestamp lo, Timestamp hi, Timestamp delta) {
  Weight best = tl.window_weight(lo, lo + delta - 1);
  auto consider = [&](Timestamp tau) {
    if (tau > lo && tau <= hi) best = std::min(best, tl.window_weight(tau, tau + delta - 1));
  };
  for (Timestamp t : tl.times) {
    consider(t + 1);
    consider(t - delta + 1);
  }
  return best;
}

// Validity of the instance-index interval [bi, ei] under the definition used
// throughout: gamma weight in every delta-window anchored in the interval,
// or in the whole (sub-delta-length) interval itself.
bool interval_valid(const EdgeTimeline& tl, std::size_t bi, std::size_t ei, Timestamp delta,
                    Weight gamma) {
  Timestamp tb = tl.times[bi], te = tl.times[ei];
  if (te - tb + 1 < delta) return tl.prefix[ei + 1] - tl.prefix[bi] >= gamma;
  return min_window_weight(tl, tb, te - delta + 1, delta) >= gamma;
}

// Latest instance in [bi, ei] from which gamma weight is still reachable:
// either a full forward delta-window (possibly extending past t_e, since it
// bounds future growth of the end border) or the remainder of the interval
// itself. Falls back to t_b, though for valid intervals the scan always hits.
Timestamp latest_reach(const EdgeTimeline& tl, std::size_t bi, std::size_t ei, Timestamp delta,
                       Weight gamma) {
  for (std::size_t x = ei + 1; x-- > bi;) {
    if (tl.window_weight(tl.times[x], tl.times[x] + delta - 1) >= gamma ||
        tl.prefix[ei + 1] - tl.prefix[x] >= gamma)
      return tl.times[x];
  }
  return tl.times[bi];
}

StretchInterval make_interval(const EdgeTimeline& tl, std::size_t bi, std::size_t ei,
                              Timestamp delta, Weight gamma) {
  StretchInterval rec;
  rec.t_b = tl.times[bi];
  rec.t_e = tl.times[ei];
  // Earliest instance by which gamma weight is accumulated from t_b.
  for (std::size_t x = bi; x <= ei; ++x) {
    if (tl.prefix[x + 1] - tl.prefix[bi] >= gamma) {
      rec.tb_max = tl.times[x];
      break;
    }
  }
  rec.te_min = latest_reach(tl, bi, ei, delta, gamma);
  return rec;
}

std::vector<StretchInterval> two_pointer_stretch(const EdgeTimeline& tl, Timestamp delta,
                                                 Weight gamma, std::uint64_t& advances) {
  const auto& ts = tl.times;
  const auto& pf = tl.prefix;
  const std::size_t n = ts.size();
  std::vector<StretchInterval> out;
  std::size_t bi = 0, ei = 0;

  auto emit = [&](std::size_t seed_bi, Timestamp tb, Timestamp tb_max) {
    assert(out.empty() || out.back().t_b < tb);
    out.push_back({tb, tb_max, latest_reach(tl, seed_bi, ei, delta, gamma), ts[ei]});
  };

  while (true) {
    // Step 2: advance ei until gamma weight is reached, shrinking bi to keep
    // the delta-constraint satisfied.
    while (pf[ei + 1] - pf[bi] < gamma) {
      ++ei;
      ++advances;
      if (ei == n) return out;
      while (ts[ei] - ts[bi] >= delta) {
        ++bi;
        ++advances;
      }
    }
    const std::size_t seed_bi = bi;
    const Timestamp tb = ts[bi];
    const Timestamp tb_max = ts[ei];

    bool done = false;
    while (!done) {
      const std::size_t old_bi = bi, old_ei = ei;
      // Step 3a: grow ei while within delta of t_bi.
      while (ei + 1 < n && ts[ei + 1] - ts[bi] < delta) {
        ++ei;
        ++advances;
      }
      // Step 3b: advance bi while the weight stays at or above gamma. The
      // pseudocode's "<= gamma" comparison and "bi - 1" decrement contradict
      // the prose; the prose wins: keep >= gamma, increment bi.
      while (bi + 1 <= ei && pf[ei + 1] - pf[bi + 1] >= gamma) {
        ++bi;
        ++advances;
      }
      // Step 3c: end of timeline, no further growth possible.
      if (ei + 1 == n) {
        emit(seed_bi, tb, tb_max);
        return out;
      }
      // Step 3d: indices stalled; probe whether the earliest unguaranteed
      // window [t_bi + 1, t_bi + delta] can still be reached.
      if (bi == old_bi && ei == old_ei) {
        const Timestamp bt = ts[bi] + 1;
        std::size_t et = ei;
        // Weight with instance bi tentatively dropped: pf[et+1] - pf[bi+1].
        while (pf[et + 1] - pf[bi + 1] < gamma) {
          ++et;
          ++advances;
          if (et == n) {
            emit(seed_bi, tb, tb_max);
            return out;
          }
          if (ts[et] - bt >= delta) {
            // Scenarios (i)/(ii): the window cannot reach gamma; the current
            // clique is maximal, the search restarts at step 2.
            emit(seed_bi, tb, tb_max);
            done = true;
            --et;
            --advances;  // counter tracks net cursor movement
            break;
          }
        }
        ++bi;
        ++advances;
        ei = et;  // scenario (iii) extends the interval and resumes at 3a
      }
    }
  }
}

}  // namespace

std::vector<StretchInterval> stretch_edge_quadratic(const EdgeTimeline& tl, Timestamp delta,
                                                    Weight gamma) {
  const std::size_t n = tl.size();
  // widest[i] = largest ei such that [i, ei] is valid, or npos.
  constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> widest(n, npos);
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t ei = bi; ei < n; ++ei)
      if (interval_valid(tl, bi, ei, delta, gamma)) widest[bi] = ei;

  std::vector<StretchInterval> out;
  std::size_t best_end = 0;
  bool any = false;
  for (std::size_t bi = 0; bi < n; ++bi) {
    if (widest[bi] == npos) continue;
    if (!any || widest[bi] > best_end) out.push_back(make_interval(tl, bi, widest[bi], delta, gamma));
    best_end = any ? std::max(best_end, widest[bi]) : widest[bi];
    any = true;
  }
  return out;
}

std::vector<StretchInterval> stretch_edge(const EdgeTimeline& tl, Timestamp delta, Weight gamma,
                                          EdgeStretchStats* stats) {
  EdgeStretchStats local;
  EdgeStretchStats& st = stats ? *stats : local;
  st = {};
  const bool has_negative =
      std::any_of(tl.weights.begin(), tl.weights.end(), [](Weight w) { return w < 0; });

  if (gamma <= 0 && !has_negative) {
    // Every window weight is >= 0 >= gamma: the full span is the one record.
    return {make_interval(tl, 0, tl.size() - 1, delta, gamma)};
  }
  if (gamma <= 0 && has_negative) {
    st.fallback_engaged = true;
    return stretch_edge_quadratic(tl, delta, gamma);
  }

  std::vector<StretchInterval> fast = two_pointer_stretch(tl, delta, gamma, st.pointer_advances);
  if (has_negative) {
    // Pointer-advance reasoning assumes monotone cumulative weight; with
    // negative weights the quadratic enumeration is authoritative.
    std::vector<StretchInterval> exact = stretch_edge_quadratic(tl, delta, gamma);
    if (exact != fast) {
      st.fallback_engaged = true;
      return exact;
    }
  }
  return fast;
}

void StretchStore::add(NodeId u, NodeId v, CliqueRecord rec) {
  by_pair_[pair_key(u, v)].push_back(std::move(rec));
  ++total_;
}

const std::vector<CliqueRecord>& StretchStore::records(NodeId u, NodeId v) const {
  static const std::vector<CliqueRecord> kEmpty;
  auto it = by_pair_.find(pair_key(u, v));
  return it == by_pair_.end() ? kEmpty : it->second;
}

std::vector<const CliqueRecord*> StretchStore::ordered_seeds() const {
  std::vector<const CliqueRecord*> seeds;
  seeds.reserve(total_);
  for (const auto& [key, recs] : by_pair_)
    for (const auto& rec : recs) seeds.push_back(&rec);
  std::sort(seeds.begin(), seeds.end(), [](const CliqueRecord* a, const CliqueRecord* b) {
    if (a->nodes[1] != b->nodes[1]) return a->nodes[1] < b->nodes[1];
    if (a->nodes[0] != b->nodes[0]) return a->nodes[0] < b->nodes[0];
    return a->t_b < b->t_b;
  });
  return seeds;
}

StretchStore stretch_phase(const TemporalNetwork& network, Timestamp delta, Weight gamma,
                           StretchStats* stats) {
  if (delta < 1) throw std::invalid_argument("delta must be a positive duration");
  StretchStats local;
  StretchStats& st = stats ? *stats : local;
  st = {};
  StretchStore store;
  for (const auto& [u, v] : network.edges()) {
    const EdgeTimeline& tl = *network.timeline(u, v);
    // The total-weight skip is only sound when no weight is negative: with
    // negatives, a sub-window can exceed the full-timeline weight.
    const bool has_negative =
        std::any_of(tl.weights.begin(), tl.weights.end(), [](Weight w) { return w < 0; });
    if (!has_negative && tl.total_weight < gamma) {
      ++st.edges_skipped_weight;
      continue;
    }
    EdgeStretchStats es;
    auto intervals = stretch_edge(tl, delta, gamma, &es);
    ++st.edges_processed;
    st.pointer_advances += es.pointer_advances;
    if (es.fallback_engaged) ++st.fallback_engaged;
    if (!es.fallback_engaged && es.pointer_advances > 2 * tl.size()) ++st.work_bound_violations;
    for (const auto& iv : intervals) {
      CliqueRecord rec;
      rec.nodes = {u, v};
      rec.t_b = iv.t_b;
      rec.t_e = iv.t_e;
      rec.tb_max = iv.tb_max;
      rec.te_min = iv.te_min;
      store.add(u, v, std::move(rec));
    }
  }
  return store;
}

bool validate_record(const TemporalNetwork& network, Timestamp delta, Weight gamma,
                     const CliqueRecord& record) {
  if (record.nodes.size() < 2 || record.t_b > record.t_e) return false;
  bool instance_at_tb = false, instance_at_te = false;
  for (std::size_t i = 0; i < record.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < record.nodes.size(); ++j) {
      const EdgeTimeline* tl = network.timeline(record.nodes[i], record.nodes[j]);
      if (!tl) return false;
      if (record.t_e - record.t_b + 1 < delta) {
        if (tl->window_weight(record.t_b, record.t_e) < gamma) return false;
      } else {
        if (min_window_weight(*tl, record.t_b, record.t_e - delta + 1, delta) < gamma)
          return false;
      }
      if (std::binary_search(tl->times.begin(), tl->times.end(), record.t_b))
        instance_at_tb = true;
      if (std::binary_search(tl->times.begin(), tl->times.end(), record.t_e))
        instance_at_te = true;
    }
  }
  return instance_at_tb && instance_at_te;
}

}  // namespace tclique
