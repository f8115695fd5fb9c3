#pragma once

#include "prufer/presentation.hpp"

#include <vector>

namespace prufer {

/// Exhaustive value-vector oracle over Z-discretizable presentations
/// (every level Z), exponents bounded by B. Points are flattened integer
/// coordinate vectors, one block of `rank` coordinates per slot in slot-id
/// order; shared-prime members agree on their level-1 coordinate.
class Oracle {
public:
    Oracle(const DomainPresentation& d, int bound);

    int bound() const { return bound_; }
    const std::vector<MaxId>& slot_order() const { return slots_; }

    /// All compatible points of the box.
    const std::vector<std::vector<int>>& box() const { return box_; }

    std::vector<std::vector<int>> ideal_points(const GlobalIdeal& i) const;
    /// Antichain of slotwise-cone-minimal elements.
    std::vector<std::vector<int>> minimal_points(std::vector<std::vector<int>> pts) const;

    /// { u : u + g >= 0 slotwise for every generator g }, with candidates
    /// restricted to |coord| <= bound - margin. The margin keeps box-wall
    /// artifacts out: a candidate that only survives because constraint
    /// vectors below the box floor are missing needs a coordinate at the
    /// wall to do so.
    std::vector<std::vector<int>> dual_of(const std::vector<std::vector<int>>& generators,
                                          int margin = 0) const;

    /// Upward closure (within the box) of the pairwise sums a + b.
    std::vector<std::vector<int>> product_points(const std::vector<std::vector<int>>& a,
                                                 const std::vector<std::vector<int>>& b) const;

    /// Set equality after restriction to the inner box |coord| <= bound - margin.
    bool equal_on_inner_box(const std::vector<std::vector<int>>& a,
                            const std::vector<std::vector<int>>& b, int margin = 2) const;

    /// Double dual reconstructed as a cut family. Throws when the result
    /// does not round-trip inside the inner box (bound exceeded).
    GlobalIdeal v_closure(const GlobalIdeal& i) const;

    GlobalIdeal reconstruct(const std::vector<std::vector<int>>& upward_closed_points) const;

private:
    const DomainPresentation& d_;
    int bound_;
    std::vector<MaxId> slots_;
    std::vector<int> offset_;  // coordinate offset per slot
    std::vector<int> rank_;
    int dims_ = 0;
    std::vector<std::vector<int>> box_;

    bool slotwise_cone_geq(const std::vector<int>& u, const std::vector<int>& v) const;
};

GlobalIdeal v_closure_oracle(const DomainPresentation& d, const GlobalIdeal& i, int bound);
std::vector<std::vector<int>> oracle_dual(const DomainPresentation& d,
                                          const std::vector<std::vector<int>>& generators,
                                          int bound);

}  // namespace prufer
