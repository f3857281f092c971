#include "cabinet/archive.hpp"

#include <algorithm>

namespace cabinet {

bool ParetoArchive::insert(const Layout& layout, const ObjectiveVector& objectives) {
    for (const auto& e : entries_) {
        if (dominates(e.objectives, objectives) ||
            nearly_equal(e.objectives, objectives, duplicate_tolerance)) {
            return false;
        }
    }
    std::erase_if(entries_, [&](const ArchiveEntry& e) {
        return dominates(objectives, e.objectives);
    });
    entries_.push_back(ArchiveEntry{layout, objectives, next_sequence_++});
    return true;
}

bool ParetoArchive::is_consistent() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            if (i == j) {
                continue;
            }
            const auto& a = entries_[i].objectives;
            const auto& b = entries_[j].objectives;
            if (dominates(a, b) || nearly_equal(a, b, duplicate_tolerance)) {
                return false;
            }
        }
    }
    return true;
}

const ArchiveEntry& select_recommended(const std::vector<ArchiveEntry>& entries) {
    if (entries.empty()) {
        throw EmptyArchive();
    }
    constexpr double tol = ParetoArchive::duplicate_tolerance;
    const ArchiveEntry* best = &entries.front();
    for (const auto& e : entries) {
        const double dh = e.objectives.heat - best->objectives.heat;
        const double dw = e.objectives.wire_mm - best->objectives.wire_mm;
        bool better = false;
        if (dh < -tol) {
            better = true;
        } else if (dh <= tol) {
            if (dw < -tol) {
                better = true;
            } else if (dw <= tol) {
                better = e.sequence < best->sequence;
            }
        }
        if (better) {
            best = &e;
        }
    }
    return *best;
}

const ArchiveEntry& select_recommended(const ParetoArchive& archive) {
    return select_recommended(archive.entries());
}

}  // namespace cabinet
