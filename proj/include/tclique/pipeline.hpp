#ifndef TCLIQUE_PIPELINE_HPP
#define TCLIQUE_PIPELINE_HPP

#include "tclique/bulk.hpp"
#include "tclique/network.hpp"
#include "tclique/stretch.hpp"

namespace tclique {

struct PipelineResult {
  ResultSink sink;
  StretchStats stretch_stats;
  BulkStats bulk_stats;
  std::size_t seed_count = 0;
  double stretch_seconds = 0;
  double bulk_seconds = 0;
};

// Both phases back to back with wall-clock timings.
PipelineResult run_pipeline(const TemporalNetwork& network, Timestamp delta, Weight gamma,
                            bool prune = true);

}  // namespace tclique

#endif
