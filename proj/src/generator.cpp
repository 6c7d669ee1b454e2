#include "tclique/generator.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace tclique {

std::vector<RawInstance> generate_instances(const GeneratorParams& p) {
  if (p.nodes < 2) throw std::invalid_argument("generator: need at least 2 nodes");
  if (p.instances < 1) throw std::invalid_argument("generator: need at least 1 instance");
  if (p.t_max < 0) throw std::invalid_argument("generator: t_max must be non-negative");
  if (p.weight_min > p.weight_max) throw std::invalid_argument("generator: empty weight range");

  // Sampling is hand-rolled on the raw engine output so the same seed yields
  // the same network on every platform (distribution objects are not
  // portable across standard library implementations).
  std::mt19937_64 rng(p.seed);
  auto uniform_index = [&](std::uint64_t n) { return rng() % n; };
  auto uniform_real = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };

  std::vector<RawInstance> out;
  out.reserve(p.instances);
  for (std::size_t i = 0; i < p.instances; ++i) {
    RawInstance inst;
    std::uint64_t u = uniform_index(p.nodes);
    std::uint64_t v = uniform_index(p.nodes - 1);
    if (v >= u) ++v;  // distinct pair
    inst.u = "n" + std::to_string(u);
    inst.v = "n" + std::to_string(v);
    inst.t = static_cast<Timestamp>(uniform_index(static_cast<std::uint64_t>(p.t_max) + 1));
    if (p.weight_min == p.weight_max) {
      inst.w = p.weight_min;
    } else if (p.integer_weights) {
      auto lo = static_cast<std::int64_t>(p.weight_min);
      auto hi = static_cast<std::int64_t>(p.weight_max);
      inst.w = static_cast<Weight>(lo + static_cast<std::int64_t>(
                                            uniform_index(static_cast<std::uint64_t>(hi - lo + 1))));
    } else {
      inst.w = uniform_real(p.weight_min, p.weight_max);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

TemporalNetwork generate_network(const GeneratorParams& params) {
  return TemporalNetwork::from_instances(generate_instances(params));
}

}  // namespace tclique
