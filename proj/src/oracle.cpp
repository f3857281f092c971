#include "cabinet/oracle.hpp"

#include <algorithm>
#include <limits>

namespace cabinet {

TooLarge::TooLarge(std::size_t n, std::size_t max_n)
    : Error("TooLarge: " + std::to_string(n) + " components exceed the enumeration limit of " +
            std::to_string(max_n)),
      n_(n) {}

namespace {

struct Scored {
    ObjectiveVector f;
    std::size_t rank;  ///< position in lexicographic enumeration
};

}  // namespace

OracleFront enumerate_pareto(const EvaluationContext& ctx, std::size_t max_n) {
    const std::size_t n = ctx.size();
    if (n > max_n) {
        throw TooLarge(n, max_n);
    }

    std::vector<ComponentIndex> flat;  // every permutation, back to back
    std::vector<Scored> scored;
    Layout layout = identity_layout(n);
    do {
        scored.push_back(Scored{evaluate(layout, ctx), scored.size()});
        flat.insert(flat.end(), layout.order.begin(), layout.order.end());
    } while (std::next_permutation(layout.order.begin(), layout.order.end()));

    std::stable_sort(scored.begin(), scored.end(), [](const Scored& l, const Scored& r) {
        if (l.f.heat != r.f.heat) {
            return l.f.heat < r.f.heat;
        }
        return l.f.wire_mm < r.f.wire_mm;
    });

    OracleFront front;
    front.enumerated_count = scored.size();
    double best_wire = std::numeric_limits<double>::infinity();
    for (const Scored& s : scored) {
        // Everything earlier has heat <= s.heat, so s survives only by beating
        // the smallest wire seen so far.
        if (!(s.f.wire_mm < best_wire)) {
            continue;
        }
        if (!front.entries.empty() && nearly_equal(front.entries.back().objectives, s.f)) {
            continue;
        }
        best_wire = s.f.wire_mm;
        const auto begin = flat.begin() + static_cast<std::ptrdiff_t>(s.rank * n);
        front.entries.push_back(
            FrontEntry{Layout{std::vector<ComponentIndex>(begin, begin + static_cast<std::ptrdiff_t>(n))},
                       s.f});
    }
    return front;
}

}  // namespace cabinet
