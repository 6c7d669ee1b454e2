#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tclique/bulk.hpp"
#include "tclique/generator.hpp"
#include "tclique/oracle.hpp"
#include "tclique/pipeline.hpp"

using namespace tclique;
using namespace testutil;

TEST_CASE("temporal domination is interval enclosure") {
  CliqueRecord c{{0, 1}, 2, 5, 2, 5};
  CHECK(is_temporally_dominated(c, {{0, 1, 2}, 1, 6, 1, 6}));
  CHECK(!is_temporally_dominated(c, {{0, 1, 2}, 3, 6, 3, 6}));
  CHECK(is_temporally_dominated(c, {{0, 1, 2}, 2, 5, 2, 5}));
}

TEST_CASE("single edge network: both records maximal") {
  auto net = make_network(
      {{"0", "1", 1, 2}, {"0", "1", 5, 1}, {"0", "1", 7, 1}, {"0", "1", 9, 1}});
  auto res = run_pipeline(net, 5, 3);
  auto got = project(res.sink.cliques());
  std::vector<Proj> expected = {{{0, 1}, 1, 5}, {{0, 1}, 5, 9}};
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("triangle: one 3-node clique dominates all seeds") {
  auto net = triangle_network();
  auto res = run_pipeline(net, 4, 1);
  REQUIRE(res.sink.count() == 1);
  const auto c = res.sink.cliques()[0];
  CHECK(c.nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(c.t_b == 1);
  CHECK(c.t_e == 6);
  CHECK(res.sink.max_cardinality() == 3);
  CHECK(res.sink.max_duration() == 5);
}

TEST_CASE("outer overlap arithmetic on the triangle") {
  auto net = triangle_network();
  auto store = stretch_phase(net, 4, 1);
  REQUIRE(store.size() == 3);
  // The seed over the lowest-labeled pair; relabeling maps A,B,C -> 0,1,2
  // (equal degrees, first-seen order).
  const auto& seeds = store.records(0, 1);
  REQUIRE(seeds.size() == 1);
  auto hits = outer_overlap(net, store, seeds[0], 0, 1, 2, 4, 1);
  REQUIRE(hits.size() == 1);
  const auto& rec = hits[0].combined;
  CHECK(rec.nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(rec.t_b == 1);
  CHECK(rec.t_e == 6);
  CHECK(rec.tb_max == 3);
  CHECK(rec.te_min == 4);
  CHECK(rec.tb_min(4) == 0);
  CHECK(rec.te_max(4) == 7);
}

TEST_CASE("outer overlap rejects disjoint growth ranges") {
  // Two far-apart bursts: teMax of the early record < tbMax of the late one.
  auto net = make_network({{"a", "b", 1}, {"a", "c", 2}, {"b", "c", 100}});
  auto store = stretch_phase(net, 3, 1);
  const auto& ab = store.records(net.node_count() - 2, net.node_count() - 1);
  // Whichever labels landed on the pair, no 3-node record can form.
  auto res = run_pipeline(net, 3, 1);
  for (const auto& c : res.sink.cliques()) CHECK(c.nodes.size() == 2);
  CHECK(!ab.empty());
}

TEST_CASE("degenerate overlap: three mutual edges at one instant") {
  auto net = make_network({{"a", "b", 4, 2}, {"a", "c", 4, 2}, {"b", "c", 4, 2}});
  auto store = stretch_phase(net, 3, 2);
  const auto& seeds = store.records(0, 1);
  REQUIRE(seeds.size() == 1);
  auto hits = outer_overlap(net, store, seeds[0], 0, 1, 2, 3, 2);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].combined.t_b == 4);
  CHECK(hits[0].combined.t_e == 4);
}

TEST_CASE("star graph: every seed appended unchanged") {
  auto net = make_network({{"hub", "a", 1}, {"hub", "a", 3}, {"hub", "b", 2}, {"hub", "c", 7}});
  auto store = stretch_phase(net, 2, 1);
  auto res = run_pipeline(net, 2, 1);
  std::vector<CliqueRecord> seeds;
  for (const auto* s : store.ordered_seeds()) seeds.push_back(*s);
  CHECK(project(res.sink.cliques()) == project(seeds));
}

TEST_CASE("empty store yields empty sink") {
  auto net = make_network({{"a", "b", 1, 1}});
  ResultSink sink;
  StretchStore store;
  auto stats = bulk_phase(net, store, 3, 5, sink);
  CHECK(sink.count() == 0);
  CHECK(stats.visited_states == 0);
}

TEST_CASE("four-clique with shared interval collapses to one record") {
  std::vector<Inst> insts;
  const char* names[] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (Timestamp t : {1, 2}) insts.push_back({names[i], names[j], t});
  auto net = make_network(insts);
  auto res = run_pipeline(net, 3, 1);
  REQUIRE(res.sink.count() == 1);
  CHECK(res.sink.cliques()[0].nodes.size() == 4);
  CHECK(res.sink.cliques()[0].t_b == 1);
  CHECK(res.sink.cliques()[0].t_e == 2);
}

namespace {

GeneratorParams random_params(std::mt19937_64& rng, int kind) {
  GeneratorParams p;
  p.nodes = 4 + rng() % 4;
  p.instances = 15 + rng() % 36;
  p.seed = rng();
  p.t_max = 10 + static_cast<Timestamp>(rng() % 40);
  if (kind == 1) {
    p.weight_min = 1;
    p.weight_max = 3;
    p.integer_weights = true;
  } else if (kind == 2) {
    p.weight_min = -3;
    p.weight_max = 3;
    p.integer_weights = true;
  }
  return p;
}

}  // namespace

TEST_CASE("randomized pipeline equals exhaustive enumeration") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_params(rng, trial % 3);
    auto net = generate_network(p);
    Timestamp delta = 1 + static_cast<Timestamp>(rng() % 8);
    Weight gamma = 1 + static_cast<Weight>(rng() % 4);
    auto res = run_pipeline(net, delta, gamma);
    auto expected = project(oracle_enumerate(net, delta, gamma));
    REQUIRE_MESSAGE(project(res.sink.cliques()) == expected, "trial ", trial, " seed ", p.seed,
                    " delta=", delta, " gamma=", gamma);
  }
}

TEST_CASE("pruning invariance and visit accounting") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_params(rng, trial % 3);
    auto net = generate_network(p);
    Timestamp delta = 1 + static_cast<Timestamp>(rng() % 8);
    Weight gamma = 1 + static_cast<Weight>(rng() % 4);
    auto pruned = run_pipeline(net, delta, gamma, true);
    auto unpruned = run_pipeline(net, delta, gamma, false);
    CHECK(project(pruned.sink.cliques()) == project(unpruned.sink.cliques()));
    CHECK(pruned.bulk_stats.visited_states <= unpruned.bulk_stats.visited_states);
    CHECK(unpruned.bulk_stats.pruned_branches == 0);
  }
}

TEST_CASE("no recursion state is visited twice within a seed") {
  // A state is the full record: the same node set may legitimately recur with
  // different intervals (sibling records of one pair), but an identical
  // record must not be re-entered.
  using Key = std::tuple<std::vector<NodeId>, Timestamp, Timestamp, Timestamp, Timestamp>;
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_params(rng, trial % 2);
    auto net = generate_network(p);
    Timestamp delta = 1 + static_cast<Timestamp>(rng() % 6);
    auto store = stretch_phase(net, delta, 1);
    std::map<std::size_t, std::set<Key>> visited;
    bool duplicate = false;
    BulkOptions options;
    options.on_visit = [&](std::size_t seed, const CliqueRecord& state) {
      Key key{state.nodes, state.t_b, state.t_e, state.tb_max, state.te_min};
      if (!visited[seed].insert(std::move(key)).second) duplicate = true;
    };
    ResultSink sink;
    bulk_phase(net, store, delta, 1, sink, options);
    CHECK(!duplicate);
  }
}

TEST_CASE("sink records validate and are mutually undominated") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_params(rng, trial % 3);
    auto net = generate_network(p);
    Timestamp delta = 1 + static_cast<Timestamp>(rng() % 8);
    Weight gamma = 1 + static_cast<Weight>(rng() % 3);
    auto res = run_pipeline(net, delta, gamma);
    const auto cliques = res.sink.cliques();
    for (const auto& c : cliques) {
      CHECK(validate_record(net, delta, gamma, c));
      for (const auto& d : cliques)
        if (&c != &d) CHECK(!oracle_dominates(c, d));
    }
  }
}

TEST_CASE("overlap outputs respect border arithmetic") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_params(rng, trial % 2);
    auto net = generate_network(p);
    Timestamp delta = 1 + static_cast<Timestamp>(rng() % 6);
    Weight gamma = 1;
    auto store = stretch_phase(net, delta, gamma);
    for (const auto* seed : store.ordered_seeds()) {
      NodeId u = seed->nodes[0], v = seed->nodes[1];
      for (NodeId n : net.shared_neighbors(seed->nodes)) {
        for (const auto& hit : outer_overlap(net, store, *seed, u, v, n, delta, gamma)) {
          const auto& r = hit.combined;
          CHECK(r.t_b >= r.tb_min(delta));
          CHECK(r.t_e <= r.te_max(delta));
          CHECK(r.tb_max == r.tb_min(delta) + delta - 1);
          CHECK(r.te_min == r.te_max(delta) - delta + 1);
          CHECK(validate_record(net, delta, gamma, r));
        }
      }
    }
  }
}
