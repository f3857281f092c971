#ifndef CABINET_OBJECTIVES_HPP
#define CABINET_OBJECTIVES_HPP

#include <vector>

#include "cabinet/model.hpp"
#include "cabinet/placement.hpp"

namespace cabinet {

/// Sum over wires of the Manhattan distance between component centers.
double wire_length(const Placement& placement, const std::vector<Edge>& edges);

/// Sum over hot components of (center depth below the cabinet top) / 100.
/// Smaller means hot components sit higher.
double heat_level(const Placement& placement, const std::vector<Component>& components);

/// Immutable inputs for repeated evaluation; shareable across threads.
class EvaluationContext {
public:
    /// Validates `components` and derives the edge set.
    EvaluationContext(std::vector<Component> components, CabinetSpec cabinet);

    const std::vector<Component>& components() const noexcept { return components_; }
    const CabinetSpec& cabinet() const noexcept { return cabinet_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return components_.size(); }

private:
    std::vector<Component> components_;
    CabinetSpec cabinet_;
    std::vector<Edge> edges_;
};

/// Pack then score. Pure and deterministic.
ObjectiveVector evaluate(const Layout& layout, const EvaluationContext& ctx);

}  // namespace cabinet

#endif  // CABINET_OBJECTIVES_HPP
