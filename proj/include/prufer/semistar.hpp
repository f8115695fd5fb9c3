#pragma once

#include "prufer/hlocal.hpp"

#include <optional>

namespace prufer {

/// Element of the divisorial spectrum: a maximal-ideal slot, or the
/// height-1 prime under a rank-2 slot.
struct DivisorialPrime {
    MaxId slot;
    bool height_one = false;

    bool operator<(const DivisorialPrime& o) const {
        return std::tie(slot, height_one) < std::tie(o.slot, o.height_one);
    }
    bool operator==(const DivisorialPrime& o) const {
        return slot == o.slot && height_one == o.height_one;
    }
};

/// Result of a spectral closure: per-slot constraint, where an absent
/// entry means the whole localization (no divisorial prime bounds the
/// slot). All-free is the whole-field value; arithmetic with it saturates.
struct SemistarImage {
    std::map<MaxId, Cut> constrained;
    bool whole_field(const DomainPresentation& d) const {
        (void)d;
        return constrained.empty();
    }
    bool operator==(const SemistarImage& o) const { return constrained == o.constrained; }
    bool operator!=(const SemistarImage& o) const { return !(*this == o); }
};

/// View of the localizing system attached to the divisorial closure:
/// membership, its spectrum, and the complement system it induces.
class LocalizingSystemView {
public:
    explicit LocalizingSystemView(const DomainPresentation& d) : d_(d) {}

    /// I in F^v iff the closure of I is the whole ring.
    bool contains(const GlobalIdeal& i) const;
    /// Pi^v: nonzero divisorial primes.
    std::vector<DivisorialPrime> spectrum() const;
    /// I in F(Pi^v) iff I escapes every divisorial prime.
    bool complement_contains(const GlobalIdeal& i) const;
    /// The smallest member of F^v on a finite presentation.
    GlobalIdeal minimum() const;

private:
    const DomainPresentation& d_;
};

bool ideal_below_prime(const DomainPresentation& d, const GlobalIdeal& i,
                       const DivisorialPrime& q);

/// Stable closure E -> union of (E : I) over F^v; computed against the
/// finite system's minimum. Equals the divisorial closure on h-local
/// presentations.
GlobalIdeal vbar_closure(const DomainPresentation& d, const GlobalIdeal& e);

/// Spectral closure: intersection of the extensions to localizations at
/// divisorial primes.
SemistarImage vsp_closure(const DomainPresentation& d, const GlobalIdeal& e);

SemistarImage embed(const DomainPresentation& d, const GlobalIdeal& i);
bool image_contains(const DomainPresentation& d, const SemistarImage& a, const SemistarImage& b);

struct Pr2Report {
    bool quasi_spectral = false;       // every nonclosed ideal sits under a divisorial prime
    bool vsp_below_v = false;          // spectral closure bounded by divisorial closure
    bool intersection_identity = false;  // R equals the meet of divisorial-prime localizations
    bool closures_coincide = false;    // stable = spectral = divisorial closure
    bool systems_match = false;        // F^v = F(Pi^v)
    bool consistent() const {
        return quasi_spectral == vsp_below_v && vsp_below_v == intersection_identity &&
               intersection_identity == closures_coincide && closures_coincide == systems_match;
    }
    bool all_hold() const { return consistent() && quasi_spectral; }
};

/// Evaluates the five conditions over a bounded grid of sample ideals.
Pr2Report check_pr2(const DomainPresentation& d);

/// The deterministic sample grid the semistar checks quantify over.
std::vector<GlobalIdeal> sample_ideal_grid(const DomainPresentation& d, std::size_t cap = 4096);

}  // namespace prufer
