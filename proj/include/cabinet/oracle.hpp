/**
 * @file oracle.hpp
 * @brief Exhaustive Pareto front for small cabinets.
 *
 * Every permutation is evaluated; the front is extracted with a sort-and-sweep
 * that shares no code with ParetoArchive, so it can serve as an independent
 * reference for the annealer.
 */

#ifndef CABINET_ORACLE_HPP
#define CABINET_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "cabinet/objectives.hpp"

namespace cabinet {

struct FrontEntry {
    Layout layout;
    ObjectiveVector objectives;
};

struct OracleFront {
    /// Sorted by (heat, wire_mm); mutually non-dominated.
    std::vector<FrontEntry> entries;
    std::uint64_t enumerated_count = 0;
};

class TooLarge : public Error {
public:
    TooLarge(std::size_t n, std::size_t max_n);
    std::size_t n() const noexcept { return n_; }

private:
    std::size_t n_;
};

inline constexpr std::size_t default_oracle_max_n = 9;

/**
 * Enumerate all n! layouts. Objective vectors within 1e-9 of an earlier
 * (lexicographically smaller) front point are treated as the same point; the
 * representative layout is the lexicographically smallest permutation.
 */
OracleFront enumerate_pareto(const EvaluationContext& ctx,
                             std::size_t max_n = default_oracle_max_n);

}  // namespace cabinet

#endif  // CABINET_ORACLE_HPP
