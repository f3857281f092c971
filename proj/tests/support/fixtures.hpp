#ifndef CABINET_TEST_FIXTURES_HPP
#define CABINET_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "cabinet/model.hpp"
#include "cabinet/placement.hpp"
#include "cabinet/rng.hpp"

namespace cabinet::test {

/// Three-component toy cabinet: A(100x100), B(200x100), C(150x50, hot),
/// one wire A-C, 300 mm wide, no rail gap.
inline std::vector<Component> abc_components() {
    return {
        {1, "A", 100.0, 100.0, 50.0, {3}, false},
        {2, "B", 200.0, 100.0, 50.0, {}, false},
        {3, "C", 150.0, 50.0, 50.0, {}, true},
    };
}

inline CabinetSpec abc_cabinet() { return CabinetSpec{300.0, 0.0, "abc"}; }

inline Layout random_layout(std::size_t n, Rng& rng) {
    Layout layout = identity_layout(n);
    for (std::size_t i = n; i > 1; --i) {
        std::swap(layout.order[i - 1], layout.order[rng.below(i)]);
    }
    return layout;
}

inline std::string data_path(const std::string& name) {
    return std::string(CABINET_DATA_DIR) + "/" + name;
}

}  // namespace cabinet::test

#endif  // CABINET_TEST_FIXTURES_HPP
