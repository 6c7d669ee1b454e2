#include "tclique/pipeline.hpp"

#include <chrono>

namespace tclique {

PipelineResult run_pipeline(const TemporalNetwork& network, Timestamp delta, Weight gamma,
                            bool prune) {
  using clock = std::chrono::steady_clock;
  PipelineResult res;

  auto t0 = clock::now();
  StretchStore store = stretch_phase(network, delta, gamma, &res.stretch_stats);
  auto t1 = clock::now();
  res.seed_count = store.size();

  BulkOptions options;
  options.prune = prune;
  res.bulk_stats = bulk_phase(network, store, delta, gamma, res.sink, options);
  auto t2 = clock::now();

  res.stretch_seconds = std::chrono::duration<double>(t1 - t0).count();
  res.bulk_seconds = std::chrono::duration<double>(t2 - t1).count();
  return res;
}

}  // namespace tclique
