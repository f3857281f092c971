#include "cabinet/placement.hpp"

#include <algorithm>
#include <numeric>

namespace cabinet {

bool is_permutation_of(const Layout& layout, std::size_t n) {
    if (layout.order.size() != n) {
        return false;
    }
    std::vector<bool> seen(n + 1, false);
    for (ComponentIndex idx : layout.order) {
        if (idx < 1 || idx > n || seen[idx]) {
            return false;
        }
        seen[idx] = true;
    }
    return true;
}

Layout identity_layout(std::size_t n) {
    Layout layout;
    layout.order.resize(n);
    std::iota(layout.order.begin(), layout.order.end(), ComponentIndex{1});
    return layout;
}

ComponentTooWide::ComponentTooWide(ComponentIndex index, double width_mm, double usable_width_mm)
    : Error("ComponentTooWide: component " + std::to_string(index) + " is " +
            std::to_string(width_mm) + " mm wide, cabinet allows " +
            std::to_string(usable_width_mm) + " mm"),
      index_(index) {}

UnknownIndex::UnknownIndex(ComponentIndex index)
    : Error("UnknownIndex: component " + std::to_string(index) + " is not placed"),
      index_(index) {}

const PlacedComponent& Placement::at(ComponentIndex index) const {
    if (index < 1 || index > components.size() || components[index - 1].index != index) {
        throw UnknownIndex(index);
    }
    return components[index - 1];
}

Placement pack(const Layout& layout, const std::vector<Component>& components,
               const CabinetSpec& cabinet) {
    const double usable = cabinet.usable_width_mm;
    for (const auto& c : components) {
        if (c.width_mm > usable) {
            throw ComponentTooWide(c.index, c.width_mm, usable);
        }
    }

    Placement out;
    out.components.resize(components.size());
    if (layout.order.empty()) {
        return out;
    }

    double cursor_x = 0.0;
    Row current{0.0, 0.0};
    std::size_t row = 0;
    bool row_open = false;

    for (ComponentIndex idx : layout.order) {
        const Component& c = components[idx - 1];
        if (row_open && cursor_x + c.width_mm > usable) {
            out.rows.push_back(current);
            current = Row{current.y_mm + current.height_mm + cabinet.row_gap_mm, 0.0};
            cursor_x = 0.0;
            ++row;
        }
        row_open = true;
        out.components[idx - 1] = PlacedComponent{idx, cursor_x, current.y_mm, c.width_mm,
                                                  c.height_mm, row};
        cursor_x += c.width_mm;
        current.height_mm = std::max(current.height_mm, c.height_mm);
    }
    out.rows.push_back(current);
    out.total_height_mm = current.y_mm + current.height_mm;
    return out;
}

Point component_center(const Placement& placement, ComponentIndex index) {
    const PlacedComponent& p = placement.at(index);
    return Point{p.x_mm + p.width_mm / 2.0, p.y_mm + p.height_mm / 2.0};
}

BigInt total_configurations(std::size_t n) {
    BigInt result = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        result *= k;
    }
    return result;
}

double fraction_of_space(std::uint64_t iterations, std::size_t n) {
    const double space = total_configurations(n).convert_to<double>();
    return std::min(1.0, static_cast<double>(iterations) / space);
}

}  // namespace cabinet
