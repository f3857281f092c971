#include "cabinet/objectives.hpp"

#include <cmath>

namespace cabinet {

double wire_length(const Placement& placement, const std::vector<Edge>& edges) {
    double total = 0.0;
    for (const Edge& e : edges) {
        const Point pa = component_center(placement, e.a);
        const Point pb = component_center(placement, e.b);
        total += std::abs(pa.x_mm - pb.x_mm) + std::abs(pa.y_mm - pb.y_mm);
    }
    return total;
}

double heat_level(const Placement& placement, const std::vector<Component>& components) {
    double total = 0.0;
    for (const Component& c : components) {
        if (c.is_hot) {
            total += component_center(placement, c.index).y_mm / 100.0;
        }
    }
    return total;
}

EvaluationContext::EvaluationContext(std::vector<Component> components, CabinetSpec cabinet)
    : components_(validate_components(std::move(components))),
      cabinet_(std::move(cabinet)),
      edges_(normalize_edges(components_)) {}

ObjectiveVector evaluate(const Layout& layout, const EvaluationContext& ctx) {
    const Placement placement = pack(layout, ctx.components(), ctx.cabinet());
    return ObjectiveVector{heat_level(placement, ctx.components()),
                           wire_length(placement, ctx.edges())};
}

}  // namespace cabinet
