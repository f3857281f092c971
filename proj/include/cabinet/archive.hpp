/**
 * @file archive.hpp
 * @brief Set of mutually non-dominated solutions found during a search.
 */

#ifndef CABINET_ARCHIVE_HPP
#define CABINET_ARCHIVE_HPP

#include <cstdint>
#include <vector>

#include "cabinet/model.hpp"
#include "cabinet/placement.hpp"

namespace cabinet {

struct ArchiveEntry {
    Layout layout;
    ObjectiveVector objectives;
    std::uint64_t sequence = 0;  ///< insertion order, used for tie-breaks

    friend bool operator==(const ArchiveEntry&, const ArchiveEntry&) = default;
};

class EmptyArchive : public Error {
public:
    EmptyArchive() : Error("EmptyArchive: no solution to recommend") {}
};

/**
 * Invariant: no entry dominates another, and no two entries have objective
 * vectors equal within `duplicate_tolerance` in both coordinates.
 * Entries are kept in insertion order.
 */
class ParetoArchive {
public:
    static constexpr double duplicate_tolerance = 1e-9;

    /// Returns true if the candidate was added. A candidate that is dominated
    /// by, or objective-equal to, an existing entry leaves the archive as is;
    /// otherwise every entry it dominates is removed.
    bool insert(const Layout& layout, const ObjectiveVector& objectives);

    const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Checks the invariant over all pairs.
    bool is_consistent() const;

private:
    std::vector<ArchiveEntry> entries_;
    std::uint64_t next_sequence_ = 0;
};

/// Lexicographic minimum: least heat, then least wire (both compared with the
/// duplicate tolerance), then earliest inserted. Throws EmptyArchive.
const ArchiveEntry& select_recommended(const ParetoArchive& archive);
const ArchiveEntry& select_recommended(const std::vector<ArchiveEntry>& entries);

}  // namespace cabinet

#endif  // CABINET_ARCHIVE_HPP
