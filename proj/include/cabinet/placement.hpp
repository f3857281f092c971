/**
 * @file placement.hpp
 * @brief Greedy shelf packing of a component permutation onto DIN-rail rows.
 *
 * A Layout is the search-space point: a permutation of component indices.
 * pack() turns it into physical coordinates by walking the order left to
 * right and opening a new row whenever the next component would cross the
 * usable width. y grows downward from the cabinet top.
 */

#ifndef CABINET_PLACEMENT_HPP
#define CABINET_PLACEMENT_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cabinet/model.hpp"

namespace cabinet {

struct Layout {
    std::vector<ComponentIndex> order;

    std::size_t size() const noexcept { return order.size(); }

    friend bool operator==(const Layout&, const Layout&) = default;
};

/// True iff `layout` holds every index 1..n exactly once.
bool is_permutation_of(const Layout& layout, std::size_t n);

/// Identity layout [1, 2, ..., n].
Layout identity_layout(std::size_t n);

struct PlacedComponent {
    ComponentIndex index = 0;
    double x_mm = 0.0;  ///< left edge
    double y_mm = 0.0;  ///< top edge, measured down from the cabinet top
    double width_mm = 0.0;
    double height_mm = 0.0;
    std::size_t row = 0;

    friend bool operator==(const PlacedComponent&, const PlacedComponent&) = default;
};

struct Row {
    double y_mm = 0.0;
    double height_mm = 0.0;

    friend bool operator==(const Row&, const Row&) = default;
};

struct Placement {
    /// Indexed by component index - 1.
    std::vector<PlacedComponent> components;
    std::vector<Row> rows;
    double total_height_mm = 0.0;

    const PlacedComponent& at(ComponentIndex index) const;

    friend bool operator==(const Placement&, const Placement&) = default;
};

class ComponentTooWide : public Error {
public:
    ComponentTooWide(ComponentIndex index, double width_mm, double usable_width_mm);
    ComponentIndex index() const noexcept { return index_; }

private:
    ComponentIndex index_;
};

class UnknownIndex : public Error {
public:
    explicit UnknownIndex(ComponentIndex index);
    ComponentIndex index() const noexcept { return index_; }

private:
    ComponentIndex index_;
};

/**
 * Shelf-pack `layout` into `cabinet`. A component whose right edge lands
 * exactly on the usable width stays in the current row. Row height is the
 * tallest member; members are top-aligned to the row.
 *
 * `components` must be validated (ordered by index). Throws ComponentTooWide
 * if any component is wider than the cabinet.
 */
Placement pack(const Layout& layout, const std::vector<Component>& components,
               const CabinetSpec& cabinet);

struct Point {
    double x_mm = 0.0;
    double y_mm = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

Point component_center(const Placement& placement, ComponentIndex index);

using BigInt = boost::multiprecision::cpp_int;

/// Size of the search space, n!.
BigInt total_configurations(std::size_t n);

/// iterations / n!, clamped to 1.
double fraction_of_space(std::uint64_t iterations, std::size_t n);

}  // namespace cabinet

#endif  // CABINET_PLACEMENT_HPP
