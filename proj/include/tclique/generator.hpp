#ifndef TCLIQUE_GENERATOR_HPP
#define TCLIQUE_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "tclique/network.hpp"

namespace tclique {

struct GeneratorParams {
  std::size_t nodes = 6;
  std::size_t instances = 40;
  std::uint64_t seed = 0;
  Timestamp t_max = 100;  // timestamps uniform in [0, t_max]
  // weight_min == weight_max yields fixed weights (default: all 1);
  // integer_weights restricts a proper range to integer values.
  Weight weight_min = 1;
  Weight weight_max = 1;
  bool integer_weights = false;
};

// Uniform random temporal edge instances over distinct node pairs,
// deterministic per seed. Throws std::invalid_argument on degenerate
// parameters (nodes < 2, instances < 1, t_max < 0, weight_min > weight_max).
std::vector<RawInstance> generate_instances(const GeneratorParams& params);

TemporalNetwork generate_network(const GeneratorParams& params);

}  // namespace tclique

#endif
