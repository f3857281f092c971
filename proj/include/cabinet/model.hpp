/**
 * @file model.hpp
 * @brief Core value types of the cabinet layout problem.
 *
 * Components are identified by their 1-based index; the catalog id is
 * display metadata only. Wires are undirected: a reciprocal listing in
 * connects_to collapses to a single Edge.
 */

#ifndef CABINET_MODEL_HPP
#define CABINET_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cabinet {

using ComponentIndex = std::uint32_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Component {
    ComponentIndex index = 0;
    std::string id;
    double width_mm = 0.0;
    double height_mm = 0.0;
    double depth_mm = 0.0;  ///< carried for assembly, unused by the 2-D model
    std::vector<ComponentIndex> connects_to;
    bool is_hot = false;

    friend bool operator==(const Component&, const Component&) = default;
};

struct CabinetSpec {
    double usable_width_mm = 600.0;
    double row_gap_mm = 40.0;
    std::string name;

    friend bool operator==(const CabinetSpec&, const CabinetSpec&) = default;
};

/// Undirected wire between two components, normalized so that a < b.
struct Edge {
    ComponentIndex a = 0;
    ComponentIndex b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ObjectiveVector {
    double heat = 0.0;
    double wire_mm = 0.0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

enum class ValidationErrorKind {
    EmptyList,
    DuplicateIndex,
    IndexOutOfRange,
    DanglingConnection,
    SelfConnection,
    NonPositiveDimension,
};

const char* to_string(ValidationErrorKind kind);

class ValidationError : public Error {
public:
    ValidationError(ValidationErrorKind kind, ComponentIndex component, std::string detail,
                    ComponentIndex target = 0);

    ValidationErrorKind kind() const noexcept { return kind_; }
    /// Offending component (0 for list-level errors).
    ComponentIndex component() const noexcept { return component_; }
    /// Connection target for DanglingConnection / SelfConnection.
    ComponentIndex target() const noexcept { return target_; }

private:
    ValidationErrorKind kind_;
    ComponentIndex component_;
    ComponentIndex target_;
};

/**
 * Check every component invariant and return the list ordered by index.
 *
 * Indices must form exactly 1..n (in any input order); dimensions must be
 * finite and positive; connections must reference another existing index.
 * Throws ValidationError naming the first offending component.
 */
std::vector<Component> validate_components(std::vector<Component> components);

/// Undirected, deduplicated wire set, sorted ascending.
std::vector<Edge> normalize_edges(const std::vector<Component>& components);

/// Pareto dominance under minimization of both objectives.
constexpr bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    return a.heat <= b.heat && a.wire_mm <= b.wire_mm &&
           (a.heat < b.heat || a.wire_mm < b.wire_mm);
}

/// Both coordinates equal within `tolerance`.
constexpr bool nearly_equal(const ObjectiveVector& a, const ObjectiveVector& b,
                            double tolerance = 1e-9) noexcept {
    const double dh = a.heat - b.heat;
    const double dw = a.wire_mm - b.wire_mm;
    return (dh <= tolerance && -dh <= tolerance) && (dw <= tolerance && -dw <= tolerance);
}

}  // namespace cabinet

#endif  // CABINET_MODEL_HPP
