#include "cabinet/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "cabinet/rng.hpp"

namespace cabinet {

std::vector<Component> sample15_components() {
    return {
        {1, "0001", 120.0, 150.0, 200.0, {3}, true},
        {2, "0002", 160.0, 165.0, 200.0, {1}, true},
        {3, "0002", 160.0, 165.0, 200.0, {7}, false},
        {4, "0003", 176.5, 158.0, 200.0, {5}, false},
        {5, "0004", 132.6, 165.0, 200.0, {6}, true},
        {6, "0005", 149.0, 155.0, 200.0, {15}, false},
        {7, "0005", 149.0, 155.0, 200.0, {14}, false},
        {8, "0005", 149.0, 155.0, 200.0, {1, 5}, false},
        {9, "0006", 129.1, 165.0, 200.0, {10}, false},
        {10, "0007", 120.0, 150.5, 200.0, {12}, false},
        {11, "0008", 138.0, 152.0, 200.0, {10}, false},
        {12, "0008", 138.0, 152.0, 200.0, {11}, false},
        {13, "0008", 138.0, 152.0, 200.0, {12}, false},
        {14, "0009", 111.6, 170.0, 200.0, {12, 15}, false},
        {15, "0010", 121.3, 150.0, 200.0, {11, 6}, false},
    };
}

CabinetSpec sample15_cabinet() { return CabinetSpec{600.0, 40.0, "sample-15"}; }

std::vector<Component> truncate_components(const std::vector<Component>& components,
                                           std::size_t k) {
    std::vector<Component> out;
    for (const auto& c : components) {
        if (c.index < 1 || c.index > k) {
            continue;
        }
        Component copy = c;
        std::erase_if(copy.connects_to, [k](ComponentIndex t) { return t > k; });
        out.push_back(std::move(copy));
    }
    return out;
}

const std::vector<ScenarioShape>& benchmark_shapes() {
    static const std::vector<ScenarioShape> shapes{
        {"A", 14, 4, 5},
        {"B", 21, 6, 22},
        {"C", 41, 12, 88},
    };
    return shapes;
}

const ScenarioShape& benchmark_shape(std::string_view name) {
    for (const auto& s : benchmark_shapes()) {
        if (name.size() == 1 && std::toupper(static_cast<unsigned char>(name[0])) == s.name[0]) {
            return s;
        }
    }
    throw Error("unknown scenario '" + std::string(name) + "' (expected A, B or C)");
}

namespace {

double on_grid(double v) { return std::round(v * 10.0) / 10.0; }

}  // namespace

std::vector<Component> synthetic_components(const ScenarioShape& shape, std::uint64_t seed) {
    const std::size_t n = shape.components;
    if (n == 0 || shape.hot > n || shape.wires > n * (n - 1) / 2) {
        throw Error("scenario '" + shape.name + "' has inconsistent counts");
    }
    Rng rng(seed);
    std::vector<Component> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = out[i];
        c.index = static_cast<ComponentIndex>(i + 1);
        const auto catalog = std::to_string(1000 + i + 1);
        c.id = catalog.substr(1);
        c.width_mm = on_grid(rng.uniform(100.0, 180.0));
        c.height_mm = on_grid(rng.uniform(140.0, 175.0));
        c.depth_mm = 200.0;
    }

    // Partial Fisher-Yates picks the hot subset.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) {
        pool[i] = i;
    }
    for (std::size_t i = 0; i < shape.hot; ++i) {
        std::swap(pool[i], pool[i + rng.below(n - i)]);
        out[pool[i]].is_hot = true;
    }

    std::set<std::pair<ComponentIndex, ComponentIndex>> wires;
    while (wires.size() < shape.wires) {
        auto a = static_cast<ComponentIndex>(1 + rng.below(n));
        auto b = static_cast<ComponentIndex>(1 + rng.below(n));
        if (a == b) {
            continue;
        }
        if (a > b) {
            std::swap(a, b);
        }
        wires.emplace(a, b);
    }
    for (const auto& [a, b] : wires) {
        out[a - 1].connects_to.push_back(b);
    }
    return out;
}

}  // namespace cabinet
