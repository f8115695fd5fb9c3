#include "prufer/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace prufer {

namespace {

constexpr long kMaxBoxPoints = 3'000'000;

struct PointHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using PointSet = std::unordered_set<std::vector<int>, PointHash>;

// integer view of a normalized cut over Z levels (always attained)
struct FastCut {
    bool minus_inf = false;
    long a = 0;  // level-1 boundary (or the rank-1 boundary)
    long b = 0;  // level-2 boundary for full rank-2 cuts
    int rank = 1;
};

FastCut fast_cut(const Cut& c, const ValueGroup& g) {
    FastCut f;
    f.rank = g.rank();
    Cut n = normalize(c, g);
    if (!n.attained) throw Error("oracle: open cut over a discrete group");
    auto to_long = [](const QuadExt& x) {
        if (!x.is_rational() || !is_integer(x.rational_part()))
            throw Error("oracle: non-integer boundary");
        return static_cast<long>(rat_num(x.rational_part()));
    };
    f.minus_inf = n.minus_inf;
    f.a = to_long(n.boundary[0]);
    if (!n.minus_inf && g.rank() == 2) f.b = to_long(n.boundary[1]);
    return f;
}

bool fast_member(const FastCut& f, const int* coords) {
    if (f.rank == 1) return coords[0] >= f.a;
    if (f.minus_inf) return coords[0] >= f.a;
    return coords[0] > f.a || (coords[0] == f.a && coords[1] >= f.b);
}

}  // namespace

Oracle::Oracle(const DomainPresentation& d, int bound) : d_(d), bound_(bound) {
    if (bound < 1) throw Error("oracle bound must be positive");
    for (const auto& [m, g] : d.slots) {
        for (auto lv : g.levels)
            if (lv != LevelTag::Z) throw Error("oracle requires Z-discretizable presentation");
        slots_.push_back(m);
        offset_.push_back(dims_);
        rank_.push_back(g.rank());
        dims_ += g.rank();
    }
    int free_dims = dims_;
    for (const auto& sp : d.shared_primes) free_dims -= static_cast<int>(sp.members.size()) - 1;
    long size = 1;
    int width = 2 * bound_ + 1;
    for (int k = 0; k < free_dims; ++k) {
        size *= width;
        if (size > kMaxBoxPoints) throw Error("oracle bound exceeded (box too large)");
    }

    // For each shared prime, the first member's level-1 coordinate is free
    // and the others mirror it.
    std::vector<int> mirror(static_cast<std::size_t>(dims_), -1);
    for (const auto& sp : d.shared_primes) {
        int first = -1;
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (!sp.members.count(slots_[s])) continue;
            if (first < 0) {
                first = offset_[s];
            } else {
                mirror[static_cast<std::size_t>(offset_[s])] = first;
            }
        }
    }

    std::vector<int> free_coords;
    for (int c = 0; c < dims_; ++c)
        if (mirror[static_cast<std::size_t>(c)] < 0) free_coords.push_back(c);

    std::vector<int> point(static_cast<std::size_t>(dims_), -bound_);
    std::vector<int> idx(free_coords.size(), 0);
    box_.reserve(static_cast<std::size_t>(size));
    while (true) {
        for (std::size_t k = 0; k < free_coords.size(); ++k)
            point[static_cast<std::size_t>(free_coords[k])] = idx[k] - bound_;
        for (int c = 0; c < dims_; ++c)
            if (mirror[static_cast<std::size_t>(c)] >= 0)
                point[static_cast<std::size_t>(c)] =
                    point[static_cast<std::size_t>(mirror[static_cast<std::size_t>(c)])];
        box_.push_back(point);
        std::size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (++idx[k] < width) break;
            idx[k] = 0;
        }
        if (k == idx.size()) break;
    }
}

bool Oracle::slotwise_cone_geq(const std::vector<int>& u, const std::vector<int>& v) const {
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        int off = offset_[s];
        if (rank_[s] == 1) {
            if (u[static_cast<std::size_t>(off)] < v[static_cast<std::size_t>(off)]) return false;
        } else {
            int d1 = u[static_cast<std::size_t>(off)] - v[static_cast<std::size_t>(off)];
            int d2 = u[static_cast<std::size_t>(off) + 1] - v[static_cast<std::size_t>(off) + 1];
            if (d1 < 0 || (d1 == 0 && d2 < 0)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> Oracle::ideal_points(const GlobalIdeal& i) const {
    std::vector<FastCut> cuts;
    cuts.reserve(slots_.size());
    for (const auto& m : slots_) cuts.push_back(fast_cut(effective_cut(d_, i, m), d_.group(m)));
    std::vector<std::vector<int>> out;
    for (const auto& pt : box_) {
        bool ok = true;
        for (std::size_t s = 0; s < slots_.size() && ok; ++s)
            ok = fast_member(cuts[s], pt.data() + offset_[s]);
        if (ok) out.push_back(pt);
    }
    return out;
}

std::vector<std::vector<int>> Oracle::minimal_points(std::vector<std::vector<int>> pts) const {
    // The sets handled here are upward closed in the componentwise order
    // (one total order per unshared slot, one product order per shared
    // prime), so a point is minimal iff no cover below it stays in the
    // set. That keeps the scan linear. The effective box limit is read off
    // the set: upward closure puts the top corner inside it.
    if (pts.empty()) return {};
    PointSet set(pts.size() * 2 + 1);
    int lim = 0;
    for (const auto& p : pts) {
        set.insert(p);
        for (int v : p) lim = std::max(lim, std::abs(v));
    }

    // component structure: shared level-1 coordinate -> member offsets
    struct Group {
        int lead;                 // offset of the shared level-1 coordinate
        std::vector<int> level2;  // offsets of the members' level-2 coordinates
    };
    std::vector<Group> groups;
    std::vector<int> grouped(static_cast<std::size_t>(dims_), 0);
    for (const auto& sp : d_.shared_primes) {
        Group g{-1, {}};
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (!sp.members.count(slots_[s])) continue;
            if (g.lead < 0) g.lead = offset_[s];
            grouped[static_cast<std::size_t>(offset_[s])] = 1;
            grouped[static_cast<std::size_t>(offset_[s]) + 1] = 1;
            g.level2.push_back(offset_[s] + 1);
        }
        groups.push_back(std::move(g));
    }
    std::vector<std::pair<int, int>> free_slots;  // (offset, rank)
    for (std::size_t s = 0; s < slots_.size(); ++s)
        if (!grouped[static_cast<std::size_t>(offset_[s])])
            free_slots.emplace_back(offset_[s], rank_[s]);

    std::vector<std::vector<int>> out;
    std::vector<int> probe;
    for (const auto& p : pts) {
        bool minimal = true;
        for (const auto& [off, rank] : free_slots) {
            probe = p;
            std::size_t o = static_cast<std::size_t>(off);
            if (rank == 1) {
                if (p[o] == -lim) continue;
                probe[o] = p[o] - 1;
            } else if (p[o + 1] > -lim) {
                probe[o + 1] = p[o + 1] - 1;
            } else if (p[o] > -lim) {
                probe[o] = p[o] - 1;
                probe[o + 1] = lim;
            } else {
                continue;
            }
            if (set.count(probe)) {
                minimal = false;
                break;
            }
        }
        for (std::size_t gi = 0; gi < groups.size() && minimal; ++gi) {
            const Group& g = groups[gi];
            for (int off2 : g.level2) {
                std::size_t o2 = static_cast<std::size_t>(off2);
                if (p[o2] == -lim) continue;
                probe = p;
                probe[o2] = p[o2] - 1;
                if (set.count(probe)) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) break;
            std::size_t lead = static_cast<std::size_t>(g.lead);
            if (p[lead] > -lim) {
                probe = p;
                probe[lead] = p[lead] - 1;
                for (int off2 : g.level2) probe[static_cast<std::size_t>(off2)] = lim;
                // mirrored shared coordinates must all move together
                for (std::size_t s = 0; s < slots_.size(); ++s)
                    if (d_.shared_primes[gi].members.count(slots_[s]))
                        probe[static_cast<std::size_t>(offset_[s])] = p[lead] - 1;
                if (set.count(probe)) minimal = false;
            }
        }
        if (minimal) out.push_back(p);
    }
    return out;
}

std::vector<std::vector<int>> Oracle::dual_of(const std::vector<std::vector<int>>& generators,
                                              int margin) const {
    int limit = bound_ - margin;
    std::vector<std::vector<int>> out;
    for (const auto& u : box_) {
        bool ok = true;
        for (int v : u) ok = ok && v >= -limit && v <= limit;
        if (!ok) continue;
        for (const auto& g : generators) {
            bool nonneg = true;
            for (std::size_t s = 0; s < slots_.size() && nonneg; ++s) {
                std::size_t off = static_cast<std::size_t>(offset_[s]);
                if (rank_[s] == 1) {
                    nonneg = u[off] + g[off] >= 0;
                } else {
                    int a = u[off] + g[off];
                    int b = u[off + 1] + g[off + 1];
                    nonneg = a > 0 || (a == 0 && b >= 0);
                }
            }
            if (!nonneg) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(u);
    }
    return out;
}

std::vector<std::vector<int>> Oracle::product_points(const std::vector<std::vector<int>>& a,
                                                     const std::vector<std::vector<int>>& b) const {
    auto amin = minimal_points(a);
    auto bmin = minimal_points(b);
    std::vector<std::vector<int>> sums;
    for (const auto& x : amin)
        for (const auto& y : bmin) {
            std::vector<int> s(static_cast<std::size_t>(dims_));
            for (int c = 0; c < dims_; ++c)
                s[static_cast<std::size_t>(c)] =
                    x[static_cast<std::size_t>(c)] + y[static_cast<std::size_t>(c)];
            sums.push_back(std::move(s));
        }
    std::vector<std::vector<int>> out;
    for (const auto& u : box_) {
        for (const auto& s : sums) {
            if (slotwise_cone_geq(u, s)) {
                out.push_back(u);
                break;
            }
        }
    }
    return out;
}

bool Oracle::equal_on_inner_box(const std::vector<std::vector<int>>& a,
                                const std::vector<std::vector<int>>& b, int margin) const {
    int inner = bound_ - margin;
    auto restrict_pts = [&](const std::vector<std::vector<int>>& pts) {
        std::vector<std::vector<int>> r;
        for (const auto& p : pts) {
            bool in = true;
            for (int v : p) in = in && v >= -inner && v <= inner;
            if (in) r.push_back(p);
        }
        std::sort(r.begin(), r.end());
        return r;
    };
    return restrict_pts(a) == restrict_pts(b);
}

GlobalIdeal Oracle::reconstruct(const std::vector<std::vector<int>>& pts) const {
    if (pts.empty()) throw Error("oracle: empty point set, cannot reconstruct");
    // Coordinates at or below -(bound-2) are treated as unbounded: the
    // closure points were computed with candidate margin 2, so a genuine
    // boundary there cannot be told apart from a level-1 half line.
    int floor_threshold = -(bound_ - 2);
    GlobalIdeal out;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const ValueGroup& g = d_.group(slots_[s]);
        std::size_t off = static_cast<std::size_t>(offset_[s]);
        if (rank_[s] == 1) {
            int mn = bound_ + 1;
            for (const auto& p : pts) mn = std::min(mn, p[off]);
            Cut c = make_cut(true, QuadExt(Rat(mn)));
            if (!is_unit(c, g)) out.locals.emplace(slots_[s], std::move(c));
        } else {
            int a_min = bound_ + 1;
            for (const auto& p : pts) a_min = std::min(a_min, p[off]);
            int b_min = bound_ + 1;
            for (const auto& p : pts)
                if (p[off] == a_min) b_min = std::min(b_min, p[off + 1]);
            Cut c = b_min <= floor_threshold
                        ? make_minus_inf_cut(true, QuadExt(Rat(a_min)))
                        : make_cut(true, QuadExt(Rat(a_min)), QuadExt(Rat(b_min)));
            c = normalize(std::move(c), g);
            if (!is_unit(c, g)) out.locals.emplace(slots_[s], std::move(c));
        }
    }
    return normalize_ideal(d_, std::move(out));
}

GlobalIdeal Oracle::v_closure(const GlobalIdeal& i) const {
    auto gens = minimal_points(ideal_points(i));
    if (gens.empty()) throw Error("oracle bound exceeded (no generators in box)");
    auto inv = dual_of(gens, 1);
    auto closure_pts = dual_of(minimal_points(inv), 2);
    GlobalIdeal out = reconstruct(closure_pts);
    // round-trip guard: the reconstructed family must carve out the same
    // points away from the box walls
    if (!equal_on_inner_box(closure_pts, ideal_points(out), 3))
        throw Error("oracle bound exceeded (reconstruction mismatch)");
    return out;
}

GlobalIdeal v_closure_oracle(const DomainPresentation& d, const GlobalIdeal& i, int bound) {
    if (!ideal_is_integral(d, i)) throw Error("v_closure_oracle: fractional input");
    Oracle o(d, bound);
    return o.v_closure(i);
}

std::vector<std::vector<int>> oracle_dual(const DomainPresentation& d,
                                          const std::vector<std::vector<int>>& generators,
                                          int bound) {
    Oracle o(d, bound);
    return o.dual_of(generators, 1);
}

}  // namespace prufer
