#include "prufer/semistar.hpp"

namespace prufer {

namespace {

void require_hlocal(const DomainPresentation& d, const char* op) {
    if (!d.is_hlocal()) throw Error(std::string(op) + ": presentation is not h-local");
}

}  // namespace

bool LocalizingSystemView::contains(const GlobalIdeal& i) const {
    require_hlocal(d_, "localizing system membership");
    return ideal_is_unit(v_closure(d_, i));
}

std::vector<DivisorialPrime> LocalizingSystemView::spectrum() const {
    std::vector<DivisorialPrime> out;
    std::set<MaxId> shared_seen;
    for (const auto& sp : d_.shared_primes) {
        // one height-1 prime for the whole declaration
        out.push_back({*sp.members.begin(), true});
        for (const auto& m : sp.members) shared_seen.insert(m);
    }
    for (const auto& [m, g] : d_.slots) {
        if (g.last_discrete()) out.push_back({m, false});
        if (g.rank() == 2 && !shared_seen.count(m)) out.push_back({m, true});
    }
    return out;
}

bool ideal_below_prime(const DomainPresentation& d, const GlobalIdeal& i,
                       const DivisorialPrime& q) {
    const ValueGroup& g = d.group(q.slot);
    Cut c = effective_cut(d, i, q.slot);
    if (q.height_one) return cut_contains(height_one_prime_cut(g), c);
    return !is_unit(c, g);
}

bool LocalizingSystemView::complement_contains(const GlobalIdeal& i) const {
    for (const auto& q : spectrum())
        if (ideal_below_prime(d_, i, q)) return false;
    return true;
}

GlobalIdeal LocalizingSystemView::minimum() const {
    GlobalIdeal j;
    for (const auto& [m, g] : d_.slots)
        if (!g.last_discrete()) j.locals.emplace(m, maximal_cut(g));
    return normalize_ideal(d_, std::move(j));
}

GlobalIdeal vbar_closure(const DomainPresentation& d, const GlobalIdeal& e) {
    require_hlocal(d, "vbar_closure");
    LocalizingSystemView view(d);
    return colon_global(d, e, view.minimum());
}

SemistarImage vsp_closure(const DomainPresentation& d, const GlobalIdeal& e) {
    LocalizingSystemView view(d);
    SemistarImage img;
    auto merge = [&](const MaxId& m, Cut c) {
        const ValueGroup& g = d.group(m);
        auto it = img.constrained.find(m);
        if (it == img.constrained.end())
            img.constrained.emplace(m, normalize(std::move(c), g));
        else
            it->second = combine_local(CombineKind::Intersect, it->second, c, g);
    };
    for (const auto& q : view.spectrum()) {
        if (!q.height_one) {
            merge(q.slot, effective_cut(d, e, q.slot));
            continue;
        }
        // extension to the localization at the height-1 prime constrains
        // only the level-1 trace, at every slot lying over it
        std::set<MaxId> members = d.sharing_set(q.slot);
        if (members.empty()) members = {q.slot};
        for (const auto& m : members) {
            const ValueGroup& g = d.group(m);
            merge(m, lift_level1(proj_level1(effective_cut(d, e, m), g), g));
        }
    }
    return img;
}

SemistarImage embed(const DomainPresentation& d, const GlobalIdeal& i) {
    SemistarImage img;
    for (const auto& [m, g] : d.slots) {
        (void)g;
        img.constrained.emplace(m, effective_cut(d, i, m));
    }
    return img;
}

bool image_contains(const DomainPresentation& d, const SemistarImage& a, const SemistarImage& b) {
    for (const auto& [m, g] : d.slots) {
        (void)g;
        auto ita = a.constrained.find(m);
        if (ita == a.constrained.end()) continue;  // free absorbs everything
        auto itb = b.constrained.find(m);
        if (itb == b.constrained.end()) return false;
        if (!cut_contains(ita->second, itb->second)) return false;
    }
    return true;
}

std::vector<GlobalIdeal> sample_ideal_grid(const DomainPresentation& d, std::size_t cap) {
    QuadExt zero{Rat(0)}, one{Rat(1)}, two{Rat(2)}, half{Rat(1, 2)};
    QuadExt rootd{Rat(0), Rat(1), d.quad_d};
    auto catalog = [&](const ValueGroup& g) {
        std::vector<Cut> cuts = {unit_cut(g), maximal_cut(g)};
        if (g.rank() == 1) {
            cuts.push_back(make_cut(true, one));
            cuts.push_back(make_cut(true, two));
            if (!g.last_discrete()) {
                cuts.push_back(make_cut(true, half));
                cuts.push_back(make_cut(false, one));
                cuts.push_back(make_cut(false, rootd));
            }
        } else {
            cuts.push_back(height_one_prime_cut(g));
            cuts.push_back(make_cut(true, one, one));
            cuts.push_back(make_cut(true, one, QuadExt(Rat(-1))));
            cuts.push_back(make_cut(true, zero, one));
            if (!g.last_discrete()) {
                cuts.push_back(make_cut(false, one, one));
                cuts.push_back(make_cut(false, zero, rootd));
            }
        }
        for (auto& c : cuts) c = normalize(std::move(c), g);
        return cuts;
    };

    std::vector<MaxId> ids;
    std::vector<std::vector<Cut>> per_slot;
    std::size_t total = 1;
    for (const auto& [m, g] : d.slots) {
        ids.push_back(m);
        per_slot.push_back(catalog(g));
        total *= per_slot.back().size();
    }
    std::size_t stride = total > cap ? total / cap + 1 : 1;

    std::vector<GlobalIdeal> grid;
    for (std::size_t index = 0; index < total; index += stride) {
        std::size_t rem = index;
        GlobalIdeal i;
        for (std::size_t s = 0; s < ids.size(); ++s) {
            const auto& cuts = per_slot[s];
            const Cut& c = cuts[rem % cuts.size()];
            rem /= cuts.size();
            if (!is_unit(c, d.group(ids[s]))) i.locals.emplace(ids[s], c);
        }
        try {
            grid.push_back(normalize_ideal(d, std::move(i)));
        } catch (const Error&) {
            // skip combinations breaking shared-prime consistency
        }
    }
    return grid;
}

Pr2Report check_pr2(const DomainPresentation& d) {
    require_hlocal(d, "check_pr2");
    LocalizingSystemView view(d);
    auto spectrum = view.spectrum();
    auto grid = sample_ideal_grid(d);

    Pr2Report r;
    r.quasi_spectral = true;
    r.vsp_below_v = true;
    r.closures_coincide = true;
    r.systems_match = true;

    GlobalIdeal unit = unit_ideal();
    r.intersection_identity = vsp_closure(d, unit) == embed(d, unit);

    for (const auto& i : grid) {
        GlobalIdeal closed = v_closure(d, i);
        if (!ideal_is_unit(closed)) {
            bool below = false;
            for (const auto& q : spectrum) below = below || ideal_below_prime(d, i, q);
            r.quasi_spectral = r.quasi_spectral && below;
        }
        SemistarImage spectral = vsp_closure(d, i);
        SemistarImage closed_img = embed(d, closed);
        r.vsp_below_v = r.vsp_below_v && image_contains(d, closed_img, spectral);
        bool stable_eq = vbar_closure(d, i) == closed;
        r.closures_coincide = r.closures_coincide && stable_eq && spectral == closed_img;
        r.systems_match = r.systems_match && (view.contains(i) == view.complement_contains(i));
    }
    return r;
}

}  // namespace prufer
