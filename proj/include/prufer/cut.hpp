#pragma once

#include "prufer/quad_ext.hpp"
#include "prufer/value_group.hpp"

#include <string>
#include <vector>

namespace prufer {

enum class CombineKind { Product, Sum, Intersect };

enum class LocalClass { DivisorialPrincipal, DivisorialNonprincipal, Nondivisorial };

/// Upward-closed subset of a value group, i.e. an ideal (possibly
/// fractional) of the valuation slot. `boundary` holds one coordinate per
/// level; when `minus_inf` is set the last level is the MINUS_INF sentinel
/// and `boundary` holds only the level-1 coordinate ("everything at or
/// above that level-1 value" depending on `attained`).
///
/// Normal form (see normalize):
///  - in a Z level the cut is attained at an integer (open cuts are
///    rewritten upward),
///  - attained = true requires every boundary coordinate to lie in its
///    level's group; a cut at an irrational boundary of a Q level is stored
///    with attained = false,
///  - a full rank-2 cut whose level-1 coordinate escapes the level-1 group
///    degenerates to a MINUS_INF cut.
struct Cut {
    std::vector<QuadExt> boundary;
    bool minus_inf = false;
    bool attained = true;

    bool operator==(const Cut& o) const {
        return minus_inf == o.minus_inf && attained == o.attained && boundary == o.boundary;
    }
    bool operator!=(const Cut& o) const { return !(*this == o); }

    std::string to_string() const;
};

Cut make_cut(bool attained, QuadExt b);
Cut make_cut(bool attained, QuadExt b1, QuadExt b2);
Cut make_minus_inf_cut(bool attained, QuadExt b1);

/// The unit ideal: attained cut at the zero vector.
Cut unit_cut(const ValueGroup& g);
/// The maximal ideal of the slot.
Cut maximal_cut(const ValueGroup& g);
/// The height-1 prime of a rank-2 slot.
Cut height_one_prime_cut(const ValueGroup& g);

bool coordinate_in_level(const QuadExt& x, LevelTag level);

Cut normalize(Cut c, const ValueGroup& g);
bool is_normal(const Cut& c, const ValueGroup& g);

/// set(a) contains set(b), i.e. ideal(a) contains ideal(b).
bool cut_contains(const Cut& a, const Cut& b);
bool is_integral(const Cut& c, const ValueGroup& g);
bool is_unit(const Cut& c, const ValueGroup& g);

/// Membership of a group element (full coordinate vector) in the cut set.
bool cut_member(const Cut& c, const std::vector<QuadExt>& v);

/// Level-1 projection of a rank-2 cut as a rank-1 cut over the level-1
/// group (the trace at the height-1 prime). Identity on rank-1 cuts.
Cut proj_level1(const Cut& c, const ValueGroup& g);
/// Pull a rank-1 cut over the level-1 group back up as a MINUS_INF cut.
Cut lift_level1(const Cut& level1, const ValueGroup& g);

Cut combine_local(CombineKind kind, const Cut& i, const Cut& j, const ValueGroup& g);
/// Translation by a group element (principal multiple).
Cut shift_cut(const Cut& c, const std::vector<QuadExt>& by, const ValueGroup& g);

/// Exact dual (V : I). Closed form for rank 1 and rank 2.
Cut dual_cut(const Cut& c, const ValueGroup& g);
/// Divisorial closure: dual twice; equivalently the open cut at a
/// group-realizable boundary closes to the attained cut, everything else is
/// fixed.
Cut v_closure_local(const Cut& c, const ValueGroup& g);
LocalClass classify_local(const Cut& c, const ValueGroup& g);
/// Smallest prime containing an integral proper cut.
Cut radical_local(const Cut& c, const ValueGroup& g);
bool is_idempotent(const Cut& c, const ValueGroup& g);

/// (c : c'), the cut of elements x with x + set(c') inside set(c).
Cut cut_quotient(const Cut& c, const Cut& cprime, const ValueGroup& g);

}  // namespace prufer
