#include "prufer/presentation.hpp"

namespace prufer {

const ValueGroup& DomainPresentation::group(const MaxId& m) const {
    auto it = slots.find(m);
    if (it == slots.end()) throw Error("unknown maximal-ideal id: " + m);
    return it->second;
}

std::set<MaxId> DomainPresentation::sharing_set(const MaxId& m) const {
    for (const auto& sp : shared_primes)
        if (sp.members.count(m)) return sp.members;
    return {};
}

void DomainPresentation::validate() const {
    if (slots.empty()) throw Error("presentation needs at least one slot");
    std::set<MaxId> seen;
    for (const auto& sp : shared_primes) {
        if (sp.members.size() < 2)
            throw Error("shared prime " + sp.prime_id + " needs at least two members");
        const ValueGroup* level1_ref = nullptr;
        for (const auto& m : sp.members) {
            const ValueGroup& g = group(m);
            if (g.rank() != 2)
                throw Error("shared prime member " + m + " must be a rank-2 slot");
            if (seen.count(m)) throw Error("slot " + m + " joins two shared primes");
            seen.insert(m);
            if (!level1_ref) {
                level1_ref = &g;
            } else if (g.level(0) != level1_ref->level(0)) {
                throw Error("shared prime " + sp.prime_id + " mixes level-1 groups");
            }
        }
    }
    if (quad_d < 2) throw Error("quad_d must be a square-free integer >= 2");
}

GlobalIdeal make_ideal(const DomainPresentation& d, std::map<MaxId, Cut> locals) {
    GlobalIdeal i;
    i.locals = std::move(locals);
    return normalize_ideal(d, std::move(i));
}

GlobalIdeal normalize_ideal(const DomainPresentation& d, GlobalIdeal i) {
    GlobalIdeal r;
    for (auto& [m, c] : i.locals) {
        const ValueGroup& g = d.group(m);
        Cut n = normalize(c, g);
        if (!is_unit(n, g)) r.locals.emplace(m, std::move(n));
    }
    check_consistency(d, r);
    return r;
}

void check_consistency(const DomainPresentation& d, const GlobalIdeal& i) {
    for (const auto& sp : d.shared_primes) {
        const Cut* ref = nullptr;
        Cut ref_cut;
        for (const auto& m : sp.members) {
            const ValueGroup& g = d.group(m);
            auto it = i.locals.find(m);
            Cut local = it == i.locals.end() ? unit_cut(g) : it->second;
            Cut p = proj_level1(local, g);
            if (!ref) {
                ref_cut = p;
                ref = &ref_cut;
            } else if (p != ref_cut) {
                throw Error("inconsistent trace at shared prime " + sp.prime_id + " (slot " + m +
                            ")");
            }
        }
    }
}

Cut effective_cut(const DomainPresentation& d, const GlobalIdeal& i, const MaxId& m) {
    auto it = i.locals.find(m);
    if (it == i.locals.end()) return unit_cut(d.group(m));
    return it->second;
}

bool ideal_is_integral(const DomainPresentation& d, const GlobalIdeal& i) {
    for (const auto& [m, c] : i.locals)
        if (!is_integral(c, d.group(m))) return false;
    return true;
}

bool ideal_is_unit(const GlobalIdeal& i) { return i.locals.empty(); }

bool ideal_contains(const DomainPresentation& d, const GlobalIdeal& a, const GlobalIdeal& b) {
    for (const auto& [m, _] : d.slots) {
        if (!cut_contains(effective_cut(d, a, m), effective_cut(d, b, m))) return false;
    }
    return true;
}

GlobalIdeal unit_ideal() { return GlobalIdeal{}; }

GlobalIdeal maximal_ideal_of(const DomainPresentation& d, const MaxId& m) {
    GlobalIdeal i;
    i.locals.emplace(m, maximal_cut(d.group(m)));
    return i;
}

std::map<MaxId, std::vector<QuadExt>> denominator(const DomainPresentation& d,
                                                  const GlobalIdeal& i) {
    std::map<MaxId, std::vector<QuadExt>> denom;
    // A group-realizable value at least -b (rounded up when -b escapes the
    // coordinate group).
    auto cover = [](const QuadExt& b, LevelTag level) {
        QuadExt need = -b;
        if (coordinate_in_level(need, level)) return need;
        return QuadExt(Rat(need.ceil()));
    };
    for (const auto& [m, c] : i.locals) {
        const ValueGroup& g = d.group(m);
        if (is_integral(c, g)) continue;
        std::vector<QuadExt> x(static_cast<std::size_t>(g.rank()), QuadExt(Rat(0)));
        const QuadExt& b1 = c.boundary[0];
        if (c.minus_inf) {
            // needs level-1 coordinate strictly positive (nonnegative when open)
            x[0] = cover(b1, g.level(0));
            if (c.attained) x[0] = x[0] + QuadExt(Rat(1));
            if (x[0].sign() < 0) x[0] = QuadExt(Rat(0));
        } else {
            if (b1.sign() < 0) x[0] = cover(b1, g.level(0));
            if (g.rank() == 2) {
                QuadExt shifted1 = b1 + x[0];
                if (shifted1.sign() == 0 && c.boundary[1].sign() < 0)
                    x[1] = cover(c.boundary[1], g.level(1));
            }
        }
        bool nonzero = false;
        for (const auto& v : x) nonzero = nonzero || v.sign() != 0;
        if (nonzero) denom.emplace(m, std::move(x));
    }
    return denom;
}

GlobalIdeal shift_ideal(const DomainPresentation& d, const GlobalIdeal& i,
                        const std::map<MaxId, std::vector<QuadExt>>& by) {
    GlobalIdeal r = i;
    for (const auto& [m, x] : by) {
        const ValueGroup& g = d.group(m);
        Cut c = effective_cut(d, r, m);
        if (c.minus_inf) {
            c.boundary[0] = c.boundary[0] + x[0];
            c = normalize(std::move(c), g);
        } else {
            c = shift_cut(c, x, g);
        }
        r.locals[m] = std::move(c);
    }
    return normalize_ideal(d, std::move(r));
}

GlobalIdeal integral_part(const DomainPresentation& d, const GlobalIdeal& i) {
    return shift_ideal(d, i, denominator(d, i));
}

}  // namespace prufer
