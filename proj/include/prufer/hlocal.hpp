#pragma once

#include "prufer/presentation.hpp"

#include <optional>

namespace prufer {

enum class MaxClass { InM, InMprime, InN, NotContaining };

enum class PredictKind { Product, Intersection, Sum, Radical, Trace };

struct Certificate {
    bool product_matches = false;
    bool irredundant = false;
    bool ok() const { return product_matches && irredundant; }
};

struct Factorization {
    GlobalIdeal divisorial_part;
    std::vector<MaxId> factors;  // sorted multiset
    Certificate certificate;
};

/// Membership of m in the classification sets of an ideal: the
/// nondivisorial maximal ideals where the ideal stays locally
/// nondivisorial (InM), those where it turns locally divisorial
/// (InMprime), and the divisorial maximal ideals over it (InN).
MaxClass classify_max(const DomainPresentation& d, const GlobalIdeal& i, const MaxId& m);

/// Slotwise divisorial closure; valid exactly on h-local presentations.
GlobalIdeal v_closure(const DomainPresentation& d, const GlobalIdeal& i);
/// Slotwise inverse; (i^{-1})^{-1} == v_closure(i).
GlobalIdeal vdual(const DomainPresentation& d, const GlobalIdeal& i);

GlobalIdeal combine_global(CombineKind kind, const DomainPresentation& d, const GlobalIdeal& i,
                           const GlobalIdeal& j);
GlobalIdeal radical_global(const DomainPresentation& d, const GlobalIdeal& i);
/// (e : j) slotwise.
GlobalIdeal colon_global(const DomainPresentation& d, const GlobalIdeal& e, const GlobalIdeal& j);

Factorization strong_factorize(const DomainPresentation& d, const GlobalIdeal& i);

Factorization predict_factorization(PredictKind kind, const DomainPresentation& d,
                                    const GlobalIdeal& i,
                                    const std::optional<GlobalIdeal>& j = std::nullopt);

struct TraceReport {
    GlobalIdeal trace;
    bool invertible = false;
    bool iv_invertible = false;
};
TraceReport trace_and_invertibility(const DomainPresentation& d, const GlobalIdeal& i);

/// J = I R_m \cap R over any finite presentation (shared primes allowed).
GlobalIdeal contract_localization(const DomainPresentation& d, const GlobalIdeal& i,
                                  const MaxId& m);

struct DivisorialDecomposition {
    GlobalIdeal invertible_part;   // product of the local principal parts at InM slots
    GlobalIdeal mprime_part;       // intersection of contractions over InMprime
    GlobalIdeal n_part;            // intersection of contractions over InN
};
DivisorialDecomposition decompose_divisorial(const DomainPresentation& d, const GlobalIdeal& i);

}  // namespace prufer
