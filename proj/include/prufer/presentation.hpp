#pragma once

#include "prufer/cut.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace prufer {

using MaxId = std::string;

struct SharedPrime {
    std::string prime_id;
    std::set<MaxId> members;  // >= 2 rank-2 slots with matching level-1 groups
};

/// Finite Prufer presentation: one valuation slot per maximal ideal plus
/// shared-prime declarations tying level-1 data of rank-2 slots together.
struct DomainPresentation {
    std::map<MaxId, ValueGroup> slots;
    std::vector<SharedPrime> shared_primes;
    int quad_d = 2;  // radicand of the boundary field

    bool is_hlocal() const { return shared_primes.empty(); }
    const ValueGroup& group(const MaxId& m) const;
    /// Members of the shared prime containing m (empty set when none).
    std::set<MaxId> sharing_set(const MaxId& m) const;
    void validate() const;
};

/// Finite-support family of local cuts; a slot absent from `locals` carries
/// the unit cut. Cuts may be fractional (negative boundaries); see
/// denominator().
struct GlobalIdeal {
    std::map<MaxId, Cut> locals;

    bool operator==(const GlobalIdeal& o) const { return locals == o.locals; }
    bool operator!=(const GlobalIdeal& o) const { return !(*this == o); }
};

GlobalIdeal make_ideal(const DomainPresentation& d, std::map<MaxId, Cut> locals);

/// Normalizes cuts slotwise, drops unit cuts, checks shared-prime level-1
/// agreement.
GlobalIdeal normalize_ideal(const DomainPresentation& d, GlobalIdeal i);
void check_consistency(const DomainPresentation& d, const GlobalIdeal& i);

Cut effective_cut(const DomainPresentation& d, const GlobalIdeal& i, const MaxId& m);

bool ideal_is_integral(const DomainPresentation& d, const GlobalIdeal& i);
bool ideal_is_unit(const GlobalIdeal& i);
/// set-containment: a contains b as submodules.
bool ideal_contains(const DomainPresentation& d, const GlobalIdeal& a, const GlobalIdeal& b);

GlobalIdeal unit_ideal();
GlobalIdeal maximal_ideal_of(const DomainPresentation& d, const MaxId& m);

/// Principal value vector x making (1/x) * integral ideal equal to i; empty
/// map when i is already integral. Level-2 components are chosen zero.
std::map<MaxId, std::vector<QuadExt>> denominator(const DomainPresentation& d,
                                                  const GlobalIdeal& i);
GlobalIdeal integral_part(const DomainPresentation& d, const GlobalIdeal& i);
GlobalIdeal shift_ideal(const DomainPresentation& d, const GlobalIdeal& i,
                        const std::map<MaxId, std::vector<QuadExt>>& by);

}  // namespace prufer
