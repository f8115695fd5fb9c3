#include "prufer/cut.hpp"

namespace prufer {

void validate_group(const ValueGroup& g) {
    if (g.levels.empty() || g.levels.size() > 2) throw Error("value group rank must be 1 or 2");
}

namespace {

void check_shape(const Cut& c, const ValueGroup& g) {
    validate_group(g);
    std::size_t expect = c.minus_inf ? 1 : static_cast<std::size_t>(g.rank());
    if (c.minus_inf && g.rank() != 2) throw Error("MINUS_INF sentinel requires a rank-2 group");
    if (c.boundary.size() != expect) throw Error("cut/group rank mismatch");
}

// Lexicographic comparison of virtual boundaries. A level-1 half-line
// {x1 >= b1} sits at (b1, -inf); the open one {x1 > b1} at (b1, +inf).
// Returns -1/0/+1.
int compare_virtual(const Cut& a, const Cut& b) {
    const QuadExt& a1 = a.boundary[0];
    const QuadExt& b1 = b.boundary[0];
    if (a1 != b1) return a1 < b1 ? -1 : 1;
    // virtual last coordinate: -1 = -inf, 0 = finite, +1 = +inf
    auto virt = [](const Cut& c) { return c.minus_inf ? (c.attained ? -1 : 1) : 0; };
    int va = virt(a);
    int vb = virt(b);
    if (va != vb) return va < vb ? -1 : 1;
    if (va != 0) return 0;
    if (a.boundary.size() < 2 || b.boundary.size() < 2) return 0;  // rank 1
    const QuadExt& a2 = a.boundary[1];
    const QuadExt& b2 = b.boundary[1];
    if (a2 != b2) return a2 < b2 ? -1 : 1;
    return 0;
}

QuadExt smallest_at_least(const QuadExt& x, bool strict) {
    // Smallest integer >= x (or > x when strict), as a QuadExt.
    if (!strict) return QuadExt(Rat(x.ceil()));
    if (x.is_rational() && is_integer(x.rational_part()))
        return QuadExt(x.rational_part() + 1);
    return QuadExt(Rat(x.floor() + 1));
}

Cut quotient_by_maximal(const Cut& c, const ValueGroup& g);

}  // namespace

Cut make_cut(bool attained, QuadExt b) {
    Cut c;
    c.boundary = {std::move(b)};
    c.attained = attained;
    return c;
}

Cut make_cut(bool attained, QuadExt b1, QuadExt b2) {
    Cut c;
    c.boundary = {std::move(b1), std::move(b2)};
    c.attained = attained;
    return c;
}

Cut make_minus_inf_cut(bool attained, QuadExt b1) {
    Cut c;
    c.boundary = {std::move(b1)};
    c.minus_inf = true;
    c.attained = attained;
    return c;
}

Cut unit_cut(const ValueGroup& g) {
    Cut c;
    c.boundary.assign(static_cast<std::size_t>(g.rank()), QuadExt(Rat(0)));
    c.attained = true;
    return c;
}

Cut maximal_cut(const ValueGroup& g) {
    Cut c = unit_cut(g);
    if (g.last_discrete())
        c.boundary.back() = QuadExt(Rat(1));
    else
        c.attained = false;
    return c;
}

Cut height_one_prime_cut(const ValueGroup& g) {
    if (g.rank() != 2) throw Error("height-one prime requires a rank-2 slot");
    if (g.level(0) == LevelTag::Z) return make_minus_inf_cut(true, QuadExt(Rat(1)));
    return make_minus_inf_cut(false, QuadExt(Rat(0)));
}

bool coordinate_in_level(const QuadExt& x, LevelTag level) {
    if (!x.is_rational()) return false;
    if (level == LevelTag::Z) return is_integer(x.rational_part());
    return true;
}

Cut normalize(Cut c, const ValueGroup& g) {
    check_shape(c, g);
    if (c.minus_inf) {
        LevelTag l1 = g.level(0);
        if (l1 == LevelTag::Z) {
            c.boundary[0] = smallest_at_least(c.boundary[0], !c.attained);
            c.attained = true;
        } else if (!c.boundary[0].is_rational()) {
            c.attained = false;
        }
        return c;
    }
    if (g.rank() == 2 && !coordinate_in_level(c.boundary[0], g.level(0))) {
        // No point of the group sits at this level-1 coordinate, so the cut
        // is determined at level 1: everything strictly above it.
        Cut m = make_minus_inf_cut(false, c.boundary[0]);
        return normalize(std::move(m), g);
    }
    LevelTag last = g.last_level();
    QuadExt& b = c.boundary.back();
    if (last == LevelTag::Z) {
        b = smallest_at_least(b, !c.attained);
        c.attained = true;
    } else if (!b.is_rational()) {
        c.attained = false;
    }
    return c;
}

bool is_normal(const Cut& c, const ValueGroup& g) {
    Cut n = c;
    return normalize(std::move(n), g) == c;
}

bool cut_contains(const Cut& a, const Cut& b) {
    int cmp = compare_virtual(a, b);
    if (cmp != 0) return cmp < 0;
    return a.attained || !b.attained;
}

bool is_integral(const Cut& c, const ValueGroup& g) { return cut_contains(unit_cut(g), c); }

bool is_unit(const Cut& c, const ValueGroup& g) { return c == unit_cut(g); }

bool cut_member(const Cut& c, const std::vector<QuadExt>& v) {
    if (c.minus_inf) {
        if (v.empty()) throw Error("empty vector");
        return c.attained ? v[0] >= c.boundary[0] : v[0] > c.boundary[0];
    }
    if (v.size() != c.boundary.size()) throw Error("vector/cut rank mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != c.boundary[i]) return v[i] > c.boundary[i];
    }
    return c.attained;
}

Cut proj_level1(const Cut& craw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    if (g.rank() == 1) return c;
    if (c.minus_inf) return make_cut(c.attained, c.boundary[0]);
    // A full cut always meets its own level-1 coordinate.
    return make_cut(true, c.boundary[0]);
}

Cut lift_level1(const Cut& level1, const ValueGroup& g) {
    if (g.rank() != 2) throw Error("lift requires a rank-2 slot");
    if (level1.boundary.size() != 1 || level1.minus_inf) throw Error("lift expects a rank-1 cut");
    return normalize(make_minus_inf_cut(level1.attained, level1.boundary[0]), g);
}

Cut combine_local(CombineKind kind, const Cut& iraw, const Cut& jraw, const ValueGroup& g) {
    const Cut i = normalize(iraw, g);
    const Cut j = normalize(jraw, g);
    switch (kind) {
        case CombineKind::Product: {
            if (i.minus_inf || j.minus_inf) {
                ValueGroup l1(g.level(0));
                Cut p = combine_local(CombineKind::Product, proj_level1(i, g), proj_level1(j, g), l1);
                return lift_level1(p, g);
            }
            Cut r;
            r.boundary.reserve(i.boundary.size());
            for (std::size_t k = 0; k < i.boundary.size(); ++k)
                r.boundary.push_back(i.boundary[k] + j.boundary[k]);
            r.attained = i.attained && j.attained;
            return normalize(std::move(r), g);
        }
        case CombineKind::Sum:
            return cut_contains(i, j) ? i : j;
        case CombineKind::Intersect:
            return cut_contains(i, j) ? j : i;
    }
    throw Error("unreachable");
}

Cut shift_cut(const Cut& c, const std::vector<QuadExt>& by, const ValueGroup& g) {
    check_shape(c, g);
    if (by.size() != static_cast<std::size_t>(g.rank())) throw Error("shift vector rank mismatch");
    Cut r = c;
    for (std::size_t k = 0; k < r.boundary.size(); ++k) r.boundary[k] = r.boundary[k] + by[k];
    return normalize(std::move(r), g);
}

Cut dual_cut(const Cut& craw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    if (c.minus_inf) {
        // Level-2 coordinates are unconstrained on both sides, so only the
        // level-1 half-line flips; an attained ray dualizes to an open one
        // and conversely.
        return normalize(make_minus_inf_cut(!c.attained, -c.boundary[0]), g);
    }
    Cut r = c;
    for (auto& b : r.boundary) b = -b;
    if (!c.attained) {
        // open at a group-realizable boundary: (V : xM) = x^{-1} V
        bool realizable = true;
        for (std::size_t k = 0; k < c.boundary.size(); ++k)
            realizable = realizable && coordinate_in_level(c.boundary[k], g.level(static_cast<int>(k)));
        r.attained = realizable;
    }
    return normalize(std::move(r), g);
}

Cut v_closure_local(const Cut& craw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    if (c.minus_inf || c.attained) return c;
    bool realizable = true;
    for (std::size_t k = 0; k < c.boundary.size(); ++k)
        realizable = realizable && coordinate_in_level(c.boundary[k], g.level(static_cast<int>(k)));
    if (!realizable) return c;
    Cut r = c;
    r.attained = true;
    return normalize(std::move(r), g);
}

LocalClass classify_local(const Cut& craw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    if (c.minus_inf) return LocalClass::DivisorialNonprincipal;
    if (c.attained) return LocalClass::DivisorialPrincipal;
    bool realizable = true;
    for (std::size_t k = 0; k < c.boundary.size(); ++k)
        realizable = realizable && coordinate_in_level(c.boundary[k], g.level(static_cast<int>(k)));
    return realizable ? LocalClass::Nondivisorial : LocalClass::DivisorialNonprincipal;
}

Cut radical_local(const Cut& craw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    if (!is_integral(c, g)) throw Error("radical_local: fractional input");
    if (is_unit(c, g)) throw Error("radical_local: unit input");
    if (g.rank() == 1) return maximal_cut(g);
    Cut p = height_one_prime_cut(g);
    if (cut_contains(p, c)) return p;
    return maximal_cut(g);
}

bool is_idempotent(const Cut& craw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    return combine_local(CombineKind::Product, c, c, g) == c;
}

namespace {

Cut quotient_by_maximal(const Cut& c, const ValueGroup& g) {
    if (g.last_discrete()) {
        std::vector<QuadExt> by(static_cast<std::size_t>(g.rank()), QuadExt(Rat(0)));
        by.back() = QuadExt(Rat(-1));
        if (c.minus_inf) return c;  // level-2 shift is absorbed
        return shift_cut(c, by, g);
    }
    // Dense last level: (c : M) equals the divisorial closure.
    return v_closure_local(c, g);
}

}  // namespace

Cut cut_quotient(const Cut& craw, const Cut& cprimeraw, const ValueGroup& g) {
    const Cut c = normalize(craw, g);
    const Cut cprime = normalize(cprimeraw, g);
    if (cprime.minus_inf) {
        ValueGroup l1(g.level(0));
        Cut q = cut_quotient(proj_level1(c, g), proj_level1(cprime, g), l1);
        return lift_level1(q, g);
    }
    if (cprime.attained) {
        std::vector<QuadExt> by;
        by.reserve(cprime.boundary.size());
        for (const auto& b : cprime.boundary) by.push_back(-b);
        if (c.minus_inf) {
            Cut r = c;
            r.boundary[0] = r.boundary[0] + by[0];
            return normalize(std::move(r), g);
        }
        return shift_cut(c, by, g);
    }
    bool realizable = true;
    for (std::size_t k = 0; k < cprime.boundary.size(); ++k)
        realizable =
            realizable && coordinate_in_level(cprime.boundary[k], g.level(static_cast<int>(k)));
    if (realizable) {
        // c' = x M with x the boundary element
        Cut q = quotient_by_maximal(c, g);
        std::vector<QuadExt> by;
        by.reserve(cprime.boundary.size());
        for (const auto& b : cprime.boundary) by.push_back(-b);
        if (q.minus_inf) {
            q.boundary[0] = q.boundary[0] + by[0];
            return normalize(std::move(q), g);
        }
        return shift_cut(q, by, g);
    }
    // Open cut at an irrational boundary: the infimum shifts exactly and
    // the attainment of c survives.
    if (c.minus_inf) {
        Cut r = c;
        r.boundary[0] = r.boundary[0] - cprime.boundary[0];
        return normalize(std::move(r), g);
    }
    Cut r = c;
    for (std::size_t k = 0; k < r.boundary.size(); ++k)
        r.boundary[k] = r.boundary[k] - cprime.boundary[k];
    return normalize(std::move(r), g);
}

std::string Cut::to_string() const {
    std::string s = attained ? "attained " : "open ";
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (i) s += ", ";
        s += boundary[i].to_string();
    }
    if (minus_inf) s += ", minus_inf";
    return s;
}

}  // namespace prufer
