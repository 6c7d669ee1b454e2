#include "tclique/network.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tclique {

void EdgeTimeline::finalize() {
  prefix.resize(times.size() + 1);
  prefix[0] = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) prefix[i + 1] = prefix[i] + weights[i];
  total_weight = prefix.back();
}

Weight EdgeTimeline::window_weight(Timestamp lo, Timestamp hi) const {
  if (lo > hi) return 0;
  auto first = std::lower_bound(times.begin(), times.end(), lo);
  auto last = std::upper_bound(times.begin(), times.end(), hi);
  return prefix[last - times.begin()] - prefix[first - times.begin()];
}

std::optional<Timestamp> EdgeTimeline::earliest_at_or_after(Timestamp bound) const {
  auto it = std::lower_bound(times.begin(), times.end(), bound);
  if (it == times.end()) return std::nullopt;
  return *it;
}

std::optional<Timestamp> EdgeTimeline::latest_at_or_before(Timestamp bound) const {
  auto it = std::upper_bound(times.begin(), times.end(), bound);
  if (it == times.begin()) return std::nullopt;
  return *(it - 1);
}

std::vector<NodeId> relabel_by_degree(const std::vector<std::size_t>& neighbor_counts) {
  std::vector<std::size_t> order(neighbor_counts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return neighbor_counts[a] < neighbor_counts[b];
  });
  std::vector<NodeId> labels(neighbor_counts.size());
  for (std::size_t label = 0; label < order.size(); ++label)
    labels[order[label]] = static_cast<NodeId>(label);
  return labels;
}

TemporalNetwork TemporalNetwork::from_instances(const std::vector<RawInstance>& instances) {
  // Intern names by first-seen order; nodes appearing only in self-loops are
  // not registered.
  std::unordered_map<std::string, std::uint32_t> intern;
  std::vector<std::string> raw_names;
  struct Inst {
    std::uint32_t u, v;
    Timestamp t;
    Weight w;
  };
  std::vector<Inst> kept;
  kept.reserve(instances.size());
  auto intern_name = [&](const std::string& s) {
    auto [it, inserted] = intern.emplace(s, static_cast<std::uint32_t>(raw_names.size()));
    if (inserted) raw_names.push_back(s);
    return it->second;
  };
  for (const auto& inst : instances) {
    if (inst.u == inst.v) continue;  // self-edges excluded
    std::uint32_t u = intern_name(inst.u);
    std::uint32_t v = intern_name(inst.v);
    kept.push_back({u, v, inst.t, inst.w});
  }
  if (kept.empty()) throw ParseError("empty network: no usable temporal edge instances");

  // Distinct static neighbors per raw node.
  std::vector<std::set<std::uint32_t>> raw_adj(raw_names.size());
  for (const auto& k : kept) {
    raw_adj[k.u].insert(k.v);
    raw_adj[k.v].insert(k.u);
  }
  std::vector<std::size_t> counts(raw_names.size());
  for (std::size_t i = 0; i < raw_adj.size(); ++i) counts[i] = raw_adj[i].size();
  std::vector<NodeId> labels = relabel_by_degree(counts);

  TemporalNetwork net;
  net.names_.resize(raw_names.size());
  for (std::size_t i = 0; i < raw_names.size(); ++i) net.names_[labels[i]] = raw_names[i];

  // Group instances per canonical pair, sort, merge equal timestamps.
  std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<Timestamp, Weight>>> grouped;
  for (const auto& k : kept) {
    NodeId u = labels[k.u], v = labels[k.v];
    if (u > v) std::swap(u, v);
    grouped[{u, v}].push_back({k.t, k.w});
  }

  net.adjacency_.resize(raw_names.size());
  net.t_min_ = std::numeric_limits<Timestamp>::max();
  net.t_max_ = std::numeric_limits<Timestamp>::min();
  for (auto& [pair, events] : grouped) {
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    EdgeTimeline tl;
    for (const auto& [t, w] : events) {
      if (!tl.times.empty() && tl.times.back() == t) {
        tl.weights.back() += w;
      } else {
        tl.times.push_back(t);
        tl.weights.push_back(w);
      }
    }
    tl.finalize();
    for (Weight w : tl.weights)
      if (w < 0) net.has_negative_ = true;
    net.instance_count_ += tl.size();
    net.t_min_ = std::min(net.t_min_, tl.times.front());
    net.t_max_ = std::max(net.t_max_, tl.times.back());
    net.adjacency_[pair.first].push_back(pair.second);
    net.adjacency_[pair.second].push_back(pair.first);
    net.edges_.push_back(pair);
    net.timelines_.emplace(pair_key(pair.first, pair.second), std::move(tl));
  }
  for (auto& adj : net.adjacency_) std::sort(adj.begin(), adj.end());
  return net;
}

const EdgeTimeline* TemporalNetwork::timeline(NodeId u, NodeId v) const {
  auto it = timelines_.find(pair_key(u, v));
  return it == timelines_.end() ? nullptr : &it->second;
}

std::vector<NodeId> TemporalNetwork::shared_neighbors(std::span<const NodeId> nodes) const {
  if (nodes.empty()) return {};
  std::vector<NodeId> shared = adjacency_[nodes[0]];
  std::vector<NodeId> next;
  for (std::size_t i = 1; i < nodes.size() && !shared.empty(); ++i) {
    const auto& adj = adjacency_[nodes[i]];
    next.clear();
    std::set_intersection(shared.begin(), shared.end(), adj.begin(), adj.end(),
                          std::back_inserter(next));
    shared.swap(next);
  }
  // Exclude the clique's own members.
  std::vector<NodeId> out;
  out.reserve(shared.size());
  for (NodeId n : shared)
    if (std::find(nodes.begin(), nodes.end(), n) == nodes.end()) out.push_back(n);
  return out;
}

namespace {

Timestamp parse_timestamp(const std::string& tok, std::size_t line_no) {
  Timestamp value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad timestamp '" + tok + "'");
  return value;
}

Weight parse_weight(const std::string& tok, std::size_t line_no) {
  char* end = nullptr;
  Weight value = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + tok + "'");
  return value;
}

}  // namespace

TemporalNetwork ingest(std::istream& source, const IngestOptions& options) {
  const bool time_first =
      options.columns == ColumnOrder::tuv || options.columns == ColumnOrder::tuvw;
  const bool weight_required =
      options.columns == ColumnOrder::uvtw || options.columns == ColumnOrder::tuvw;

  std::vector<RawInstance> instances;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> toks;
    std::string tok;
    while (fields >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%') continue;
    if (toks.size() < 3 || toks.size() > 4 || (weight_required && toks.size() != 4))
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       (weight_required ? "4" : "3 or 4") + " fields, got " +
                       std::to_string(toks.size()));
    RawInstance inst;
    if (time_first) {
      inst.t = parse_timestamp(toks[0], line_no);
      inst.u = toks[1];
      inst.v = toks[2];
    } else {
      inst.u = toks[0];
      inst.v = toks[1];
      inst.t = parse_timestamp(toks[2], line_no);
    }
    inst.w = toks.size() == 4 ? parse_weight(toks[3], line_no) : 1.0;
    instances.push_back(std::move(inst));
  }
  return TemporalNetwork::from_instances(instances);
}

}  // namespace tclique
