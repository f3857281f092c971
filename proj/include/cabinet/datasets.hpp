#ifndef CABINET_DATASETS_HPP
#define CABINET_DATASETS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cabinet/model.hpp"

namespace cabinet {

/// The 15-component hypothetical cabinet (hot: #1, #2, #5).
std::vector<Component> sample15_components();

/// Default cabinet for sample-15: 600 mm usable width, 40 mm between rails.
CabinetSpec sample15_cabinet();

/// Keep components 1..k and drop connections pointing past k.
std::vector<Component> truncate_components(const std::vector<Component>& components,
                                           std::size_t k);

struct ScenarioShape {
    std::string name;
    std::size_t components = 0;
    std::size_t hot = 0;
    std::size_t wires = 0;
};

/// Component, hot and wire counts of the A/B/C benchmark cabinets.
const std::vector<ScenarioShape>& benchmark_shapes();

/// Look up "A", "B" or "C" (case-insensitive). Throws Error otherwise.
const ScenarioShape& benchmark_shape(std::string_view name);

/**
 * Random cabinet with the given counts: widths in [100, 180] mm, heights in
 * [140, 175] mm (0.1 mm grid), depth 200 mm, distinct undirected wires
 * recorded on the lower-indexed endpoint. Same shape and seed give the same
 * cabinet.
 */
std::vector<Component> synthetic_components(const ScenarioShape& shape, std::uint64_t seed);

}  // namespace cabinet

#endif  // CABINET_DATASETS_HPP
