#include "cabinet/model.hpp"

#include <algorithm>
#include <cmath>

namespace cabinet {

const char* to_string(ValidationErrorKind kind) {
    switch (kind) {
        case ValidationErrorKind::EmptyList: return "EmptyList";
        case ValidationErrorKind::DuplicateIndex: return "DuplicateIndex";
        case ValidationErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ValidationErrorKind::DanglingConnection: return "DanglingConnection";
        case ValidationErrorKind::SelfConnection: return "SelfConnection";
        case ValidationErrorKind::NonPositiveDimension: return "NonPositiveDimension";
    }
    return "Unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind, ComponentIndex component,
                                 std::string detail, ComponentIndex target)
    : Error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      component_(component),
      target_(target) {}

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::vector<Component> validate_components(std::vector<Component> components) {
    if (components.empty()) {
        throw ValidationError(ValidationErrorKind::EmptyList, 0, "component list is empty");
    }
    const auto n = static_cast<ComponentIndex>(components.size());

    std::vector<bool> seen(n + 1, false);
    for (const auto& c : components) {
        if (c.index < 1 || c.index > n) {
            throw ValidationError(ValidationErrorKind::IndexOutOfRange, c.index,
                                  "component " + std::to_string(c.index) +
                                      " outside 1.." + std::to_string(n));
        }
        if (seen[c.index]) {
            throw ValidationError(ValidationErrorKind::DuplicateIndex, c.index,
                                  "component " + std::to_string(c.index) + " listed twice");
        }
        seen[c.index] = true;
    }

    std::sort(components.begin(), components.end(),
              [](const Component& l, const Component& r) { return l.index < r.index; });

    for (const auto& c : components) {
        const std::string who = "component " + std::to_string(c.index);
        if (!positive_finite(c.width_mm) || !positive_finite(c.height_mm) ||
            !positive_finite(c.depth_mm)) {
            throw ValidationError(ValidationErrorKind::NonPositiveDimension, c.index,
                                  who + " has a non-positive or non-finite dimension");
        }
        for (ComponentIndex target : c.connects_to) {
            if (target == c.index) {
                throw ValidationError(ValidationErrorKind::SelfConnection, c.index,
                                      who + " connects to itself", target);
            }
            if (target < 1 || target > n) {
                throw ValidationError(ValidationErrorKind::DanglingConnection, c.index,
                                      who + " connects to missing component " +
                                          std::to_string(target),
                                      target);
            }
        }
    }
    return components;
}

std::vector<Edge> normalize_edges(const std::vector<Component>& components) {
    std::vector<Edge> edges;
    for (const auto& c : components) {
        for (ComponentIndex target : c.connects_to) {
            edges.push_back(Edge{std::min(c.index, target), std::max(c.index, target)});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace cabinet
