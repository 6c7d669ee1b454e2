#include "tclique/bulk.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>

namespace tclique {

void ResultSink::add(const CliqueRecord& rec) {
  auto& held = by_nodes_[rec.nodes];
  // Held intervals are mutually non-enclosing, so t_e grows with t_b and the
  // only possible encloser of rec is the entry with the greatest t_b <= rec's.
  auto it = held.lower_bound(rec.t_b);
  if (it != held.begin() && std::prev(it)->second.t_e >= rec.t_e) return;  // enclosed: drop
  if (it != held.end() && it->first == rec.t_b && it->second.t_e >= rec.t_e)
    return;  // enclosed or identical: drop (the first arrival survives)
  while (it != held.end() && it->second.t_e <= rec.t_e) it = held.erase(it);
  held.emplace(rec.t_b, rec);
}

std::vector<CliqueRecord> ResultSink::cliques() const {
  std::vector<CliqueRecord> out;
  for (const auto& [nodes, held] : by_nodes_)
    for (const auto& [tb, rec] : held) out.push_back(rec);
  return out;
}

std::size_t ResultSink::count() const {
  std::size_t n = 0;
  for (const auto& [nodes, held] : by_nodes_) n += held.size();
  return n;
}

std::size_t ResultSink::max_cardinality() const {
  std::size_t best = 0;
  for (const auto& [nodes, held] : by_nodes_)
    if (!held.empty()) best = std::max(best, nodes.size());
  return best;
}

Timestamp ResultSink::max_duration() const {
  Timestamp best = 0;
  for (const auto& [nodes, held] : by_nodes_)
    for (const auto& [tb, rec] : held) best = std::max(best, rec.t_e - rec.t_b);
  return best;
}

namespace {

// One constituent clique and the edges it covers for border searches.
struct ConstituentGroup {
  const CliqueRecord* rec;
  std::vector<std::pair<NodeId, NodeId>> pairs;
};

// New t_b: the first edge occurrence at or after tb_min among the merged
// edge set. Constituent borders already inside are reused; otherwise the
// group's edges are searched, stopping early once the border itself is hit.
std::optional<Timestamp> select_begin(const TemporalNetwork& net,
                                      std::span<const ConstituentGroup> groups,
                                      Timestamp tb_min) {
  std::optional<Timestamp> best;
  for (const auto& g : groups) {
    std::optional<Timestamp> cand;
    if (g.rec->t_b >= tb_min) {
      cand = g.rec->t_b;
    } else {
      for (const auto& [x, y] : g.pairs) {
        auto t = net.timeline(x, y)->earliest_at_or_after(tb_min);
        if (t && (!cand || *t < *cand)) cand = *t;
        if (cand && *cand == tb_min) break;
      }
    }
    if (!cand) return std::nullopt;  // no occurrence within the outer border
    if (!best || *cand < *best) best = *cand;
    if (*best == tb_min) break;
  }
  return best;
}

std::optional<Timestamp> select_end(const TemporalNetwork& net,
                                    std::span<const ConstituentGroup> groups, Timestamp te_max) {
  std::optional<Timestamp> best;
  for (const auto& g : groups) {
    std::optional<Timestamp> cand;
    if (g.rec->t_e <= te_max) {
      cand = g.rec->t_e;
    } else {
      for (const auto& [x, y] : g.pairs) {
        auto t = net.timeline(x, y)->latest_at_or_before(te_max);
        if (t && (!cand || *t > *cand)) cand = *t;
        if (cand && *cand == te_max) break;
      }
    }
    if (!cand) return std::nullopt;
    if (!best || *cand > *best) best = *cand;
    if (*best == te_max) break;
  }
  return best;
}

// Exhaustive substitute for the border selection: all duration-wise maximal
// valid intervals of `nodes` whose borders fall inside [tb_min2, te_max2].
// Used on negative-weight networks (always) and whenever the arithmetic
// selection fails validation: the shrunk borders bound growth without
// guaranteeing it, so the widest in-window stamps can overshoot a valid
// interval or miss sibling intervals entirely.
std::vector<CliqueRecord> combine_exhaustive(const TemporalNetwork& net,
                                             const std::vector<NodeId>& nodes,
                                             Timestamp tb_min2, Timestamp te_max2,
                                             Timestamp delta, Weight gamma) {
  std::vector<Timestamp> stamps;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const EdgeTimeline* tl = net.timeline(nodes[i], nodes[j]);
      if (!tl) return {};
      stamps.insert(stamps.end(), tl->times.begin(), tl->times.end());
    }
  }
  std::sort(stamps.begin(), stamps.end());
  stamps.erase(std::unique(stamps.begin(), stamps.end()), stamps.end());

  // Maximality is judged against extensions over all stamps, not just the
  // in-window ones, so every combination emits a consistent subset of the
  // same global per-node-set maximal family.
  std::vector<std::pair<Timestamp, Timestamp>> valid;
  CliqueRecord probe;
  probe.nodes = nodes;
  for (std::size_t i = 0; i < stamps.size(); ++i) {
    for (std::size_t j = i; j < stamps.size(); ++j) {
      probe.t_b = probe.tb_max = stamps[i];
      probe.t_e = probe.te_min = stamps[j];
      if (validate_record(net, delta, gamma, probe)) valid.push_back({stamps[i], stamps[j]});
    }
  }
  std::vector<CliqueRecord> out;
  for (const auto& [tb, te] : valid) {
    if (tb < tb_min2 || te > te_max2) continue;
    bool enclosed = false;
    for (const auto& [tb2, te2] : valid) {
      if (tb2 <= tb && te <= te2 && (tb2 < tb || te < te2)) {
        enclosed = true;
        break;
      }
    }
    if (enclosed) continue;
    CliqueRecord rec;
    rec.nodes = nodes;
    rec.t_b = tb;
    rec.t_e = te;
    rec.tb_max = tb_min2 + delta - 1;
    rec.te_min = te_max2 - delta + 1;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CliqueRecord> combine(const TemporalNetwork& net, std::vector<NodeId> nodes,
                                  std::span<const ConstituentGroup> groups, Timestamp tb_min2,
                                  Timestamp te_max2, Timestamp delta, Weight gamma) {
  if (net.has_negative_weights())
    return combine_exhaustive(net, nodes, tb_min2, te_max2, delta, gamma);
  auto tb = select_begin(net, groups, tb_min2);
  auto te = select_end(net, groups, te_max2);
  if (!tb || !te || *tb > *te) return {};
  CliqueRecord rec;
  rec.nodes = std::move(nodes);
  rec.t_b = *tb;
  rec.t_e = *te;
  rec.tb_max = tb_min2 + delta - 1;
  rec.te_min = te_max2 - delta + 1;
  // The outer borders bound growth but do not guarantee it: the widest
  // in-window stamps can overshoot a valid sub-interval, so the selection is
  // verified and, on failure, replaced by the per-interval enumeration.
  if (!validate_record(net, delta, gamma, rec))
    return combine_exhaustive(net, rec.nodes, tb_min2, te_max2, delta, gamma);
  return {std::move(rec)};
}

bool overlaps(const CliqueRecord& a, Timestamp a_tbmax, Timestamp a_temin,
              const CliqueRecord& b, Timestamp delta) {
  return b.tb_min(delta) <= a_temin && b.te_max(delta) >= a_tbmax;
}

}  // namespace

std::vector<OuterOverlapHit> outer_overlap(const TemporalNetwork& net, const StretchStore& store,
                                           const CliqueRecord& c, NodeId u, NodeId v, NodeId n,
                                           Timestamp delta, Weight gamma) {
  std::vector<OuterOverlapHit> hits;
  std::vector<NodeId> nodes = {u, v, n};
  std::sort(nodes.begin(), nodes.end());
  for (const CliqueRecord& cu : store.records(u, n)) {
    if (!overlaps(c, c.tb_max, c.te_min, cu, delta)) continue;
    const Timestamp tb_min1 = std::max(c.tb_min(delta), cu.tb_min(delta));
    const Timestamp te_max1 = std::min(c.te_max(delta), cu.te_max(delta));
    const Timestamp tb_max1 = tb_min1 + delta - 1;
    const Timestamp te_min1 = te_max1 - delta + 1;
    for (const CliqueRecord& cv : store.records(v, n)) {
      if (!(cv.tb_min(delta) <= te_min1 && cv.te_max(delta) >= tb_max1)) continue;
      const Timestamp tb_min2 = std::max(tb_min1, cv.tb_min(delta));
      const Timestamp te_max2 = std::min(te_max1, cv.te_max(delta));
      const ConstituentGroup groups[] = {
          {&c, {{u, v}}},
          {&cu, {{u, n}}},
          {&cv, {{v, n}}},
      };
      for (auto& rec : combine(net, nodes, groups, tb_min2, te_max2, delta, gamma))
        hits.push_back({&cu, &cv, std::move(rec)});
    }
  }
  return hits;
}

std::vector<CliqueRecord> inner_overlap(const TemporalNetwork& net, const StretchStore& store,
                                        const CliqueRecord& c, const CliqueRecord& cp,
                                        Timestamp delta, Weight gamma) {
  // Overlap check between c and cp. (The pseudocode compares against
  // cp.tbMax here; the paper's overlap criterion uses teMax.)
  if (!overlaps(c, c.tb_max, c.te_min, cp, delta)) return {};
  const Timestamp tb_min1 = std::max(c.tb_min(delta), cp.tb_min(delta));
  const Timestamp te_max1 = std::min(c.te_max(delta), cp.te_max(delta));
  const Timestamp tb_max1 = tb_min1 + delta - 1;
  const Timestamp te_min1 = te_max1 - delta + 1;

  const NodeId a = c.max_node();
  // The node unique to cp; the connecting edge is {a, b}.
  NodeId b = cp.nodes.front();
  for (NodeId x : cp.nodes) {
    if (!std::binary_search(c.nodes.begin(), c.nodes.end(), x)) {
      b = x;
      break;
    }
  }
  std::vector<NodeId> nodes;
  std::set_union(c.nodes.begin(), c.nodes.end(), cp.nodes.begin(), cp.nodes.end(),
                 std::back_inserter(nodes));

  std::vector<std::pair<NodeId, NodeId>> c_pairs;
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < c.nodes.size(); ++j)
      c_pairs.push_back({c.nodes[i], c.nodes[j]});
  std::vector<std::pair<NodeId, NodeId>> cp_unique_pairs;  // edges of cp not in c
  for (NodeId x : cp.nodes)
    if (x != b) cp_unique_pairs.push_back({std::min(x, b), std::max(x, b)});

  std::vector<CliqueRecord> out;
  for (const CliqueRecord& ce : store.records(std::min(a, b), std::max(a, b))) {
    if (!(ce.tb_min(delta) <= te_min1 && ce.te_max(delta) >= tb_max1)) continue;
    const Timestamp tb_min2 = std::max(tb_min1, ce.tb_min(delta));
    const Timestamp te_max2 = std::min(te_max1, ce.te_max(delta));
    const ConstituentGroup groups[] = {
        {&c, c_pairs},
        {&cp, cp_unique_pairs},
        {&ce, {{std::min(a, b), std::max(a, b)}}},
    };
    for (auto& rec : combine(net, nodes, groups, tb_min2, te_max2, delta, gamma))
      out.push_back(std::move(rec));
  }
  return out;
}

bool is_spatial_growth_dominated(const TemporalNetwork& net, const CliqueRecord& cn,
                                 const std::vector<NodeId>& ne, const CliqueRecord& cnew,
                                 std::span<const CliqueRecord* const> er, Timestamp delta) {
  for (NodeId x : net.shared_neighbors(cn.nodes))
    if (x > cn.max_node() && !std::binary_search(ne.begin(), ne.end(), x)) return false;
  Timestamp er_tbmin = std::numeric_limits<Timestamp>::min();
  Timestamp er_temax = std::numeric_limits<Timestamp>::max();
  for (const CliqueRecord* k : er) {
    er_tbmin = std::max(er_tbmin, k->tb_min(delta));
    er_temax = std::min(er_temax, k->te_max(delta));
  }
  return er_tbmin <= cnew.te_min && cnew.tb_max <= er_temax;
}

bool is_temporal_growth_dominated(const StretchStore& store, const CliqueRecord& cn,
                                  std::span<const CliqueRecord* const> er,
                                  const std::vector<NodeId>& nr,
                                  std::span<const CliqueRecord* const> cr,
                                  std::span<const CliqueRecord* const> cp, Timestamp delta) {
  Timestamp er_tbmin = std::numeric_limits<Timestamp>::min();
  Timestamp er_temax = std::numeric_limits<Timestamp>::max();
  for (const CliqueRecord* k : er) {
    er_tbmin = std::max(er_tbmin, k->tb_min(delta));
    er_temax = std::min(er_temax, k->te_max(delta));
  }
  // The minimum extension growth covers the branch root's full potential.
  if (er_tbmin <= cn.tb_min(delta) && cn.te_max(delta) <= er_temax) return true;

  // Neighboring-branch records must not exceed the minimum extension growth.
  for (const CliqueRecord* k : cr)
    if (k->t_b < er_tbmin || er_temax < k->t_e) return false;

  // Edges between not-yet-added neighbors: sufficient overlap with the
  // current state's branch roots yet borders beyond the minimum growth.
  if (!cp.empty()) {
    Timestamp cp_min_tbmax = std::numeric_limits<Timestamp>::max();
    Timestamp cp_max_temin = std::numeric_limits<Timestamp>::min();
    for (const CliqueRecord* s : cp) {
      cp_min_tbmax = std::min(cp_min_tbmax, s->tb_max);
      cp_max_temin = std::max(cp_max_temin, s->te_min);
    }
    for (std::size_t i = 0; i < nr.size(); ++i) {
      for (std::size_t j = i + 1; j < nr.size(); ++j) {
        for (const CliqueRecord& rec : store.records(nr[i], nr[j])) {
          if (rec.te_max(delta) >= cp_min_tbmax && rec.t_b < er_tbmin) return false;
          if (rec.tb_min(delta) <= cp_max_temin && rec.t_e > er_temax) return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct BulkContext {
  const TemporalNetwork& net;
  const StretchStore& store;
  Timestamp delta;
  Weight gamma;
  ResultSink& sink;
  const BulkOptions& options;
  BulkStats stats;
  std::size_t current_seed = 0;
};

// Per-recursion working state backing the pruning predicates.
struct Frame {
  std::vector<CliqueRecord> extensions;  // E, non-decreasing max(X)
  RecordSet extension_set;
  std::vector<std::size_t> forward;                                  // E^e indices into E
  std::vector<NodeId> new_nodes;                                     // N^e, sorted
  std::vector<std::pair<const CliqueRecord*, std::size_t>> sources;  // C^e
  std::vector<const CliqueRecord*> adjacent;                         // C^a
};

// Returns the index of rec in frame.extensions, inserting when new.
std::size_t add_extension(Frame& frame, CliqueRecord rec) {
  if (frame.extension_set.contains(rec)) {
    for (std::size_t i = 0; i < frame.extensions.size(); ++i)
      if (frame.extensions[i] == rec) return i;
  }
  frame.extension_set.insert(rec);
  frame.extensions.push_back(std::move(rec));
  return frame.extensions.size() - 1;
}

void add_forward(Frame& frame, std::size_t idx, NodeId new_node,
                 const CliqueRecord* source_a, const CliqueRecord* source_b = nullptr) {
  if (std::find(frame.forward.begin(), frame.forward.end(), idx) == frame.forward.end())
    frame.forward.push_back(idx);
  auto pos = std::lower_bound(frame.new_nodes.begin(), frame.new_nodes.end(), new_node);
  if (pos == frame.new_nodes.end() || *pos != new_node) frame.new_nodes.insert(pos, new_node);
  for (const CliqueRecord* src : {source_a, source_b}) {
    if (!src) continue;
    auto pair = std::make_pair(src, idx);
    if (std::find(frame.sources.begin(), frame.sources.end(), pair) == frame.sources.end())
      frame.sources.push_back(pair);
  }
}

// Selects neighboring-branch records with sufficient overlap into C^a,
// evaluated with the C^e aggregates as of this iteration.
void select_adjacent(Frame& frame, std::span<const CliqueRecord* const> candidates,
                     Timestamp delta) {
  if (frame.sources.empty()) return;
  Timestamp max_temin = std::numeric_limits<Timestamp>::min();
  Timestamp min_tbmax = std::numeric_limits<Timestamp>::max();
  for (const auto& [src, idx] : frame.sources) {
    max_temin = std::max(max_temin, src->te_min);
    min_tbmax = std::min(min_tbmax, src->tb_max);
  }
  for (const CliqueRecord* k : candidates) {
    if (k->tb_min(delta) <= max_temin && k->te_max(delta) >= min_tbmax &&
        std::find(frame.adjacent.begin(), frame.adjacent.end(), k) == frame.adjacent.end())
      frame.adjacent.push_back(k);
  }
}

RecordSet compute_cuts(BulkContext& ctx, const Frame& frame) {
  RecordSet cuts;
  for (const auto& [src, idx] : frame.sources) {
    const CliqueRecord& cn = *src;
    const CliqueRecord& cnew = frame.extensions[idx];
    if (!is_temporally_dominated(cn, cnew)) continue;
    std::vector<const CliqueRecord*> er;
    for (std::size_t i : frame.forward)
      if (frame.extensions[i].max_node() >= cn.max_node()) er.push_back(&frame.extensions[i]);
    if (er.empty()) continue;
    if (!is_spatial_growth_dominated(ctx.net, cn, frame.new_nodes, cnew, er, ctx.delta)) continue;
    std::vector<NodeId> nr;
    for (NodeId x : frame.new_nodes)
      if (x >= cn.max_node()) nr.push_back(x);
    std::vector<const CliqueRecord*> cr;
    for (const CliqueRecord* k : frame.adjacent)
      if (k->max_node() >= cn.max_node()) cr.push_back(k);
    std::vector<const CliqueRecord*> cp;
    for (const auto& [s, i] : frame.sources)
      if (s->max_node() <= cn.max_node()) cp.push_back(s);
    if (is_temporal_growth_dominated(ctx.store, cn, er, nr, cr, cp, ctx.delta))
      cuts.insert(cn);
  }
  return cuts;
}

RecordSet bulk_inner(BulkContext& ctx, const CliqueRecord& c,
                     const std::vector<CliqueRecord>& e_prev);

// Maximality check, recursion into higher-labeled extensions, and result
// emission; shared between the outer and inner steps.
void recurse_and_emit(BulkContext& ctx, const CliqueRecord& c, const Frame& frame) {
  bool maximal = true;
  RecordSet local_cuts;
  for (const CliqueRecord& cnew : frame.extensions) {
    if (is_temporally_dominated(c, cnew)) maximal = false;
    if (cnew.max_node() > c.max_node()) {
      if (ctx.options.prune && local_cuts.contains(cnew)) {
        ++ctx.stats.pruned_branches;
        continue;
      }
      RecordSet sub = bulk_inner(ctx, cnew, frame.extensions);
      local_cuts.merge(sub);
    }
  }
  if (maximal) ctx.sink.add(c);
}

RecordSet bulk_outer(BulkContext& ctx, const CliqueRecord& c) {
  ++ctx.stats.visited_states;
  if (ctx.options.on_visit) ctx.options.on_visit(ctx.current_seed, c);
  const NodeId u = c.nodes[0], v = c.nodes[1];

  Frame frame;
  for (NodeId n : ctx.net.shared_neighbors(c.nodes)) {  // increasing label order
    for (auto& hit : outer_overlap(ctx.net, ctx.store, c, u, v, n, ctx.delta, ctx.gamma)) {
      std::size_t idx = add_extension(frame, std::move(hit.combined));
      if (n > v) add_forward(frame, idx, n, hit.via_u, hit.via_v);
    }
    if (ctx.options.prune) {
      std::vector<const CliqueRecord*> candidates;
      for (const CliqueRecord& k : ctx.store.records(u, n)) candidates.push_back(&k);
      for (const CliqueRecord& k : ctx.store.records(v, n)) candidates.push_back(&k);
      select_adjacent(frame, candidates, ctx.delta);
    }
  }

  RecordSet cuts = ctx.options.prune ? compute_cuts(ctx, frame) : RecordSet{};
  recurse_and_emit(ctx, c, frame);
  return cuts;
}

RecordSet bulk_inner(BulkContext& ctx, const CliqueRecord& c,
                     const std::vector<CliqueRecord>& e_prev) {
  ++ctx.stats.visited_states;
  if (ctx.options.on_visit) ctx.options.on_visit(ctx.current_seed, c);

  Frame frame;
  for (const CliqueRecord& cp : e_prev) {  // unique-node ascending order
    if (cp.nodes == c.nodes) continue;
    auto hits = inner_overlap(ctx.net, ctx.store, c, cp, ctx.delta, ctx.gamma);
    for (auto& cnew : hits) {
      std::size_t idx = add_extension(frame, std::move(cnew));
      if (cp.max_node() > c.max_node()) add_forward(frame, idx, cp.max_node(), &cp);
    }
    if (ctx.options.prune) {
      std::vector<const CliqueRecord*> candidates;
      for (const CliqueRecord& k : e_prev)
        if (k.max_node() == cp.max_node()) candidates.push_back(&k);
      select_adjacent(frame, candidates, ctx.delta);
    }
  }

  RecordSet cuts = ctx.options.prune ? compute_cuts(ctx, frame) : RecordSet{};
  recurse_and_emit(ctx, c, frame);
  return cuts;
}

}  // namespace

BulkStats bulk_phase(const TemporalNetwork& net, const StretchStore& store, Timestamp delta,
                     Weight gamma, ResultSink& sink, const BulkOptions& options) {
  BulkContext ctx{net, store, delta, gamma, sink, options, {}, 0};
  RecordSet global_cuts;
  auto seeds = store.ordered_seeds();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    ctx.current_seed = i;
    if (options.prune && global_cuts.contains(*seeds[i])) {
      ++ctx.stats.pruned_branches;
      continue;
    }
    RecordSet cuts = bulk_outer(ctx, *seeds[i]);
    global_cuts.merge(cuts);
  }
  return ctx.stats;
}

}  // namespace tclique
