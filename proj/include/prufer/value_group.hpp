#pragma once

#include "prufer/rational.hpp"

#include <vector>

namespace prufer {

enum class LevelTag { Z, Q };

/// Totally ordered value group of one valuation slot: a single rank-1 group
/// (Z or Q) or the lexicographic product of two of them. Boundary
/// coordinates live in Q(sqrt d).
struct ValueGroup {
    std::vector<LevelTag> levels;  // size 1 or 2, lexicographic order

    ValueGroup() = default;
    explicit ValueGroup(LevelTag l1) : levels{l1} {}
    ValueGroup(LevelTag l1, LevelTag l2) : levels{l1, l2} {}

    int rank() const { return static_cast<int>(levels.size()); }
    LevelTag level(int i) const { return levels.at(static_cast<std::size_t>(i)); }
    LevelTag last_level() const { return levels.back(); }

    /// A discrete last level means the maximal ideal is principal, hence
    /// every ideal of the slot is divisorial.
    bool last_discrete() const { return last_level() == LevelTag::Z; }

    bool operator==(const ValueGroup& o) const { return levels == o.levels; }
    bool operator!=(const ValueGroup& o) const { return !(*this == o); }
};

void validate_group(const ValueGroup& g);

}  // namespace prufer
