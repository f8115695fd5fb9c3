#pragma once

#include "prufer/rational.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace prufer {

enum class FamilyKind { UnitSteps, DyadicSteps };

struct Family {
    std::string name;
    FamilyKind kind;
};

/// Countable presentation: per family one limit maximal ideal (indexed 0)
/// and principal maximal ideals indexed 1, 2, ... All computation happens
/// at a fixed truncation level K; verdicts are required to be stable under
/// raising K.
struct FamilyPresentation {
    std::vector<Family> families;
    int truncation = 8;

    int family_index(const std::string& name) const;
    void validate() const;
};

struct KTooSmall : Error {
    explicit KTooSmall(const std::string& what) : Error(what) {}
};

/// Identifies a maximal ideal: index 0 is the limit ideal of the family,
/// positive indices are the principal ones.
struct AdMaxId {
    int family = 0;
    int index = 0;
    bool is_limit() const { return index == 0; }
    bool operator<(const AdMaxId& o) const {
        return std::tie(family, index) < std::tie(o.family, o.index);
    }
    bool operator==(const AdMaxId& o) const { return family == o.family && index == o.index; }
};

/// Exponent data of an element up to units. X(f,i) generates the i-th
/// principal maximal ideal; XT(f,k) is the level-k limit generator with
/// rewriting XT(f,k) = X(f,k+1) * XT(f,k+1)^(1 or 2).
struct Monomial {
    std::map<std::pair<int, int>, long long> x;   // X(f,i), i >= 1
    std::map<std::pair<int, int>, long long> xt;  // XT(f,k), k >= 0

    Monomial& mul_x(int family, int index, long long e);
    Monomial& mul_xt(int family, int level, long long e);
    bool operator==(const Monomial& o) const { return x == o.x && xt == o.xt; }
};

/// One rewriting step XT(f,k) -> X(f,k+1)*XT(f,k+1)^step applied to every
/// symbol below `level`; full normalization pushes all XT symbols to
/// `level`.
Monomial rewrite_to_level(const FamilyPresentation& p, Monomial m, int level);

Rat valuation_at(const FamilyPresentation& p, const Monomial& m, const AdMaxId& at);

/// The product of the level-0 limit generators: a monomial with positive
/// value at every maximal ideal (the nonzero-Jacobson-radical witness).
Monomial jacobson_witness(const FamilyPresentation& p);

/// Principal-ideal trace of a family beyond the explicit window:
/// value(i) = density * weight(i) + periodic[i mod period] for i > K,
/// where weight(i) = 2^(i-1) for dyadic families and 1 for unit families.
struct TailDesc {
    Rat density;
    std::vector<Rat> periodic = {Rat(0)};

    Rat at(int i, FamilyKind kind) const;
    bool operator==(const TailDesc& o) const;
};

struct LimitCut {
    Rat boundary;
    bool attained = true;
    bool operator==(const LimitCut& o) const {
        return boundary == o.boundary && attained == o.attained;
    }
};

/// Exact valuation data of an ideal at every maximal ideal: an explicit
/// window at the principal ideals up to K, a tail description beyond, and
/// the limit-ideal cut, per family.
struct ValuationProfile {
    struct PerFamily {
        std::vector<Rat> window;  // values at indices 1..K
        TailDesc tail;
        LimitCut limit;
        bool operator==(const PerFamily& o) const {
            return window == o.window && tail == o.tail && limit == o.limit;
        }
    };
    std::vector<PerFamily> families;
    bool operator==(const ValuationProfile& o) const { return families == o.families; }
    bool operator!=(const ValuationProfile& o) const { return !(*this == o); }
};

ValuationProfile unit_profile(const FamilyPresentation& p);
ValuationProfile limit_maximal_profile(const FamilyPresentation& p, int family);
bool profile_is_integral(const ValuationProfile& v);

/// Pointwise ideal arithmetic on profiles.
ValuationProfile profile_product(const FamilyPresentation& p, const ValuationProfile& a,
                                 const ValuationProfile& b);
ValuationProfile profile_sum(const FamilyPresentation& p, const ValuationProfile& a,
                             const ValuationProfile& b);
ValuationProfile profile_intersect(const FamilyPresentation& p, const ValuationProfile& a,
                                   const ValuationProfile& b);
ValuationProfile profile_power(const FamilyPresentation& p, ValuationProfile a, long long e);

/// Dual (R : I) computed by monomial duality: coordinatewise bounds plus
/// the realizability law (an element with negative limit value is negative
/// at cofinitely many principal ideals, enforced through tail densities).
ValuationProfile profile_dual(const FamilyPresentation& p, const ValuationProfile& v);
ValuationProfile profile_v_closure(const FamilyPresentation& p, const ValuationProfile& v);

bool monomial_in_profile(const FamilyPresentation& p, const Monomial& m,
                         const ValuationProfile& v);

/// Generators of ideals in the family model.
struct PatternGen {
    int family = 0;
    int start = 1;  // first principal index of the progression
    int step = 1;
    long long exponent = 1;
};
struct LimitTraceGen {
    int family = 0;
    Rat value;  // {f : v_limit(f) >= value}
};
struct ScaledTermGen {
    Monomial base;
    std::map<int, long long> limit_powers;  // family -> exponent of the limit ideal
};
using AdGenerator = std::variant<Monomial, PatternGen, LimitTraceGen, ScaledTermGen>;

struct ADIdeal {
    std::vector<AdGenerator> generators;
};

ValuationProfile profile_of(const FamilyPresentation& p, const ADIdeal& i);

struct WeakFactorization {
    ValuationProfile divisorial_part;
    std::map<int, long long> exponents;  // family -> t = r - s at its limit ideal
    bool certificate_ok = false;
    bool lemma_ok = false;  // closure and ideal agree at every principal ideal
};
WeakFactorization weak_factorize(const FamilyPresentation& p, const ADIdeal& i);

ADIdeal construct_arbitrary(const FamilyPresentation& p,
                            const std::vector<std::tuple<int, long long, long long>>& targets);

bool is_sharp(const FamilyPresentation& p, const AdMaxId& m);

struct FixtureReport {
    std::string name;
    int truncation = 0;
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const {
        for (const auto& [_, ok] : checks)
            if (!ok) return false;
        return true;
    }
    /// Verdict signature used for the K-stability comparison.
    std::vector<std::pair<std::string, bool>> verdicts() const { return checks; }
};

enum class FixtureName { InfNonDiv, SumNotDiv, NoFac, DivNotLoc };
FixtureReport run_fixture(FixtureName name, int truncation);

}  // namespace prufer
