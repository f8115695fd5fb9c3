#include "prufer/suites.hpp"

#include "prufer/oracle.hpp"
#include "prufer/semistar.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace prufer {

namespace {

const ValueGroup kGroups[] = {
    ValueGroup(LevelTag::Z),
    ValueGroup(LevelTag::Q),
    ValueGroup(LevelTag::Z, LevelTag::Z),
    ValueGroup(LevelTag::Z, LevelTag::Q),
    ValueGroup(LevelTag::Q, LevelTag::Z),
    ValueGroup(LevelTag::Q, LevelTag::Q),
};

Rat random_rat(Rng& rng, int max_num, bool nonneg) {
    int den = rng.range(1, 4);
    int num = rng.range(nonneg ? 0 : -max_num, max_num);
    return Rat(num, den);
}

}  // namespace

DomainPresentation random_hlocal_presentation(Rng& rng, int max_slots) {
    DomainPresentation d;
    int n = rng.range(1, max_slots);
    for (int s = 0; s < n; ++s)
        d.slots.emplace("S" + std::to_string(s), kGroups[rng.range(0, 5)]);
    d.validate();
    return d;
}

DomainPresentation random_shared_presentation(Rng& rng) {
    DomainPresentation d;
    int members = rng.range(2, 3);
    SharedPrime sp;
    sp.prime_id = "P";
    for (int s = 0; s < members; ++s) {
        std::string id = "S" + std::to_string(s);
        d.slots.emplace(id, ValueGroup(LevelTag::Z, LevelTag::Z));
        sp.members.insert(id);
    }
    d.shared_primes.push_back(std::move(sp));
    if (rng.chance(1, 2)) d.slots.emplace("T0", ValueGroup(LevelTag::Z));
    d.validate();
    return d;
}

Cut random_cut(Rng& rng, const ValueGroup& g, int quad_d, bool integral_only) {
    auto coord = [&](LevelTag level, bool nonneg) {
        if (level == LevelTag::Z) return QuadExt(Rat(rng.range(nonneg ? 0 : -4, 4)));
        return QuadExt(random_rat(rng, 4, nonneg));
    };
    Cut c;
    int kind = rng.range(0, 9);
    if (g.rank() == 1) {
        if (kind < 2) return unit_cut(g);
        if (kind < 4) return maximal_cut(g);
        if (kind < 7 || g.last_discrete()) {
            c = make_cut(true, coord(g.level(0), integral_only));
        } else if (kind < 9) {
            c = make_cut(false, coord(g.level(0), integral_only));
        } else {
            // quadratic irrational boundary
            Rat b = random_rat(rng, 2, false);
            if (b == 0) b = Rat(1);
            if (integral_only && b < 0) b = -b;
            Rat a = random_rat(rng, 3, integral_only);
            c = make_cut(false, QuadExt(a, b, quad_d));
        }
    } else {
        if (kind < 2) return unit_cut(g);
        if (kind == 2) return maximal_cut(g);
        if (kind == 3) return height_one_prime_cut(g);
        if (kind < 6) {
            c = make_minus_inf_cut(rng.chance(1, 2), coord(g.level(0), false));
            if (integral_only) {
                // keep the level-1 trace strictly inside the cone
                QuadExt b = c.boundary[0];
                if (b.sign() <= 0) c.boundary[0] = QuadExt(Rat(1) + (b.sign() < 0 ? -b.rational_part() : Rat(0)));
            }
        } else {
            bool open = !g.last_discrete() && rng.chance(1, 2);
            QuadExt b2 = coord(g.level(1), false);
            if (!g.last_discrete() && rng.chance(1, 4)) {
                Rat rad = random_rat(rng, 2, false);
                if (rad == 0) rad = Rat(1);
                b2 = QuadExt(b2.rational_part(), rad, quad_d);
                open = true;
            }
            c = make_cut(!open, coord(g.level(0), integral_only), b2);
            if (integral_only && c.boundary[0].sign() == 0 && c.boundary[1].sign() < 0)
                c.boundary[1] = -c.boundary[1];
        }
    }
    c = normalize(std::move(c), g);
    if (integral_only && !is_integral(c, g)) {
        // push into the cone with a principal shift
        std::vector<QuadExt> by(static_cast<std::size_t>(g.rank()), QuadExt(Rat(0)));
        by[0] = QuadExt(Rat(5));
        c = shift_cut(c, by, g);
    }
    return c;
}

GlobalIdeal random_ideal(Rng& rng, const DomainPresentation& d, bool integral_only) {
    GlobalIdeal i;
    for (const auto& [m, g] : d.slots) {
        if (rng.chance(1, 3)) continue;  // unit at this slot
        Cut c = random_cut(rng, g, d.quad_d, integral_only);
        if (!is_unit(c, g)) i.locals.emplace(m, std::move(c));
    }
    // shared level-1 data must agree; overwrite members with one trace
    for (const auto& sp : d.shared_primes) {
        int trace = rng.range(integral_only ? 0 : -3, 3);
        for (const auto& m : sp.members) {
            const ValueGroup& g = d.group(m);
            Cut c = rng.chance(1, 2)
                        ? make_cut(true, QuadExt(Rat(trace)),
                                   QuadExt(Rat(rng.range(integral_only && trace == 0 ? 0 : -3, 3))))
                        : make_minus_inf_cut(true, QuadExt(Rat(std::max(trace, 1))));
            if (c.minus_inf) {
                i.locals[m] = normalize(std::move(c), g);
            } else {
                i.locals[m] = normalize(std::move(c), g);
            }
        }
        // minus-inf members force the same level-1 boundary everywhere, so
        // regenerate uniformly when mixing forms broke consistency
        try {
            check_consistency(d, i);
        } catch (const Error&) {
            Cut c = make_cut(true, QuadExt(Rat(std::max(trace, 0))), QuadExt(Rat(1)));
            for (const auto& m : sp.members) i.locals[m] = normalize(c, d.group(m));
        }
    }
    return normalize_ideal(d, std::move(i));
}

namespace {

struct FailureCase {
    DomainPresentation d;
    std::vector<GlobalIdeal> ideals;
    std::string message;
};

using HlocalPredicate =
    std::function<std::string(const DomainPresentation&, const std::vector<GlobalIdeal>&)>;

std::string dump_case(const DomainPresentation& d, const std::vector<GlobalIdeal>& ideals) {
    PresentationFile f;
    f.presentation = d;
    for (std::size_t k = 0; k < ideals.size(); ++k)
        f.ideals.emplace("I" + std::to_string(k), ideals[k]);
    return serialize_presentation(f);
}

// Greedy minimization: drop slots, then shrink boundaries toward zero,
// then simplify flags to attained.
FailureCase shrink_case(const HlocalPredicate& fails, FailureCase c) {
    bool progress = true;
    int rounds = 0;
    auto still_fails = [&](const DomainPresentation& d, const std::vector<GlobalIdeal>& ideals) {
        try {
            std::string msg = fails(d, ideals);
            if (!msg.empty()) c.message = msg;
            return !msg.empty();
        } catch (const Error&) {
            return false;  // malformed shrink, not a counterexample
        }
    };
    while (progress && ++rounds < 200) {
        progress = false;
        // drop a slot
        for (const auto& [m, g] : c.d.slots) {
            if (c.d.slots.size() <= 1) break;
            DomainPresentation d2 = c.d;
            d2.slots.erase(m);
            bool in_shared = false;
            for (const auto& sp : d2.shared_primes) in_shared = in_shared || sp.members.count(m);
            if (in_shared) continue;
            std::vector<GlobalIdeal> ideals2 = c.ideals;
            for (auto& i : ideals2) i.locals.erase(m);
            if (still_fails(d2, ideals2)) {
                c.d = std::move(d2);
                c.ideals = std::move(ideals2);
                progress = true;
                break;
            }
        }
        if (progress) continue;
        // shrink one boundary coordinate toward zero
        for (std::size_t k = 0; k < c.ideals.size() && !progress; ++k) {
            for (const auto& [m, cut] : c.ideals[k].locals) {
                for (std::size_t b = 0; b < cut.boundary.size(); ++b) {
                    const QuadExt& x = cut.boundary[b];
                    if (x.sign() == 0) continue;
                    QuadExt half(x.rational_part() / 2, x.radical_part() / 2,
                                 x.radicand() == 0 ? 2 : x.radicand());
                    std::vector<GlobalIdeal> ideals2 = c.ideals;
                    Cut cut2 = cut;
                    cut2.boundary[b] = x.radical_part() == 0 && is_integer(x.rational_part())
                                          ? QuadExt(Rat(floor_rat(x.rational_part() / 2)))
                                          : half;
                    ideals2[k].locals[m] = normalize(std::move(cut2), c.d.group(m));
                    if (still_fails(c.d, ideals2)) {
                        c.ideals = std::move(ideals2);
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
        }
        if (progress) continue;
        // simplify an open flag
        for (std::size_t k = 0; k < c.ideals.size() && !progress; ++k) {
            for (const auto& [m, cut] : c.ideals[k].locals) {
                if (cut.attained) continue;
                std::vector<GlobalIdeal> ideals2 = c.ideals;
                Cut cut2 = cut;
                cut2.attained = true;
                ideals2[k].locals[m] = normalize(std::move(cut2), c.d.group(m));
                if (still_fails(c.d, ideals2)) {
                    c.ideals = std::move(ideals2);
                    progress = true;
                    break;
                }
            }
        }
    }
    return c;
}

void run_property(CheckResult& out, const SuiteOptions& opts, long cases_per_seed,
                  const std::function<DomainPresentation(Rng&)>& gen_presentation,
                  int ideals_per_case, bool integral_only, const HlocalPredicate& fails) {
    Rng rng(opts.seed * 0x9e37ull + std::hash<std::string>{}(out.name));
    for (long n = 0; n < cases_per_seed; ++n) {
        DomainPresentation d = gen_presentation(rng);
        std::vector<GlobalIdeal> ideals;
        for (int k = 0; k < ideals_per_case; ++k) ideals.push_back(random_ideal(rng, d, integral_only));
        ++out.cases;
        std::string msg = fails(d, ideals);
        if (!msg.empty()) {
            out.pass = false;
            FailureCase c = shrink_case(fails, {std::move(d), std::move(ideals), msg});
            out.detail = c.message;
            out.counterexample = dump_case(c.d, c.ideals);
            return;
        }
    }
}

// ---------------------------------------------------------------- local --

void suite_local(RunReport& rep, const SuiteOptions& opts) {
    auto add = [&](const std::string& name) -> CheckResult& {
        rep.checks.push_back({name, true, 0, "", ""});
        return rep.checks.back();
    };

    {
        CheckResult& c = add("normalization_idempotent_and_order");
        Rng rng(opts.seed + 11);
        for (long n = 0; n < opts.cases; ++n, ++c.cases) {
            const ValueGroup& g = kGroups[rng.range(0, 5)];
            Cut a = random_cut(rng, g, 2, false);
            if (normalize(a, g) != a) {
                c.pass = false;
                c.detail = "normalize not idempotent on " + a.to_string();
                return;
            }
            Cut b = random_cut(rng, g, 2, false);
            bool ab = cut_contains(a, b);
            bool ba = cut_contains(b, a);
            if (!ab && !ba) {
                c.pass = false;
                c.detail = "cuts incomparable: " + a.to_string() + " vs " + b.to_string();
                return;
            }
            if (ab && ba && a != b) {
                c.pass = false;
                c.detail = "distinct cuts mutually containing";
                return;
            }
        }
    }
    {
        CheckResult& c = add("product_monoid_and_lattice_laws");
        Rng rng(opts.seed + 12);
        for (long n = 0; n < opts.cases; ++n, ++c.cases) {
            const ValueGroup& g = kGroups[rng.range(0, 5)];
            Cut a = random_cut(rng, g, 2, false);
            Cut b = random_cut(rng, g, 2, false);
            Cut e = random_cut(rng, g, 2, false);
            auto prod = [&](const Cut& x, const Cut& y) {
                return combine_local(CombineKind::Product, x, y, g);
            };
            if (prod(a, b) != prod(b, a) || prod(prod(a, b), e) != prod(a, prod(b, e)) ||
                prod(a, unit_cut(g)) != normalize(a, g)) {
                c.pass = false;
                c.detail = "product law failed on " + a.to_string() + ", " + b.to_string();
                return;
            }
            Cut s = combine_local(CombineKind::Sum, a, b, g);
            Cut i = combine_local(CombineKind::Intersect, a, b, g);
            if (!cut_contains(s, a) || !cut_contains(a, i) ||
                combine_local(CombineKind::Sum, a, i, g) != normalize(a, g) ||
                combine_local(CombineKind::Intersect, a, s, g) != normalize(a, g)) {
                c.pass = false;
                c.detail = "lattice law failed on " + a.to_string() + ", " + b.to_string();
                return;
            }
        }
    }
    {
        CheckResult& c = add("closure_axioms_and_translation");
        Rng rng(opts.seed + 13);
        for (long n = 0; n < opts.cases; ++n, ++c.cases) {
            const ValueGroup& g = kGroups[rng.range(0, 5)];
            Cut a = random_cut(rng, g, 2, false);
            Cut av = v_closure_local(a, g);
            Cut b = random_cut(rng, g, 2, false);
            bool ok = cut_contains(av, a) && v_closure_local(av, g) == av &&
                      av == dual_cut(dual_cut(a, g), g);
            if (cut_contains(b, a)) ok = ok && cut_contains(v_closure_local(b, g), av);
            std::vector<QuadExt> by(static_cast<std::size_t>(g.rank()), QuadExt(Rat(0)));
            by[0] = QuadExt(Rat(rng.range(-2, 2)));
            ok = ok && v_closure_local(shift_cut(a, by, g), g) == shift_cut(av, by, g);
            if (!ok) {
                c.pass = false;
                c.detail = "closure axiom failed on " + a.to_string();
                return;
            }
        }
    }
    {
        CheckResult& c = add("nondivisorial_iff_principal_multiple_of_maximal");
        Rng rng(opts.seed + 14);
        ValueGroup q(LevelTag::Q);
        for (long n = 0; n < opts.cases; ++n, ++c.cases) {
            Cut a = random_cut(rng, q, 2, false);
            bool nondiv = classify_local(a, q) == LocalClass::Nondivisorial;
            bool xm = false;
            if (a.boundary[0].is_rational()) {
                Cut cand = combine_local(CombineKind::Product, make_cut(true, a.boundary[0]),
                                         maximal_cut(q), q);
                xm = cand == normalize(a, q);
            }
            if (nondiv != xm) {
                c.pass = false;
                c.detail = "classification mismatch on " + a.to_string();
                return;
            }
        }
    }
    {
        CheckResult& c = add("rank1_duals_match_single_slot_oracle");
        Rng rng(opts.seed + 15);
        DomainPresentation d;
        d.slots.emplace("M", ValueGroup(LevelTag::Z));
        Oracle o(d, opts.bound);
        ValueGroup z(LevelTag::Z);
        for (long n = 0; n < std::min<long>(opts.cases, 60); ++n, ++c.cases) {
            Cut a = make_cut(true, QuadExt(Rat(rng.range(-2, 3))));
            GlobalIdeal i;
            if (!is_unit(a, z)) i.locals.emplace("M", a);
            auto pts = o.ideal_points(i);
            auto dual = o.dual_of(o.minimal_points(pts), 1);
            Cut closed = dual_cut(a, z);
            GlobalIdeal expect;
            if (!is_unit(closed, z)) expect.locals.emplace("M", closed);
            if (!o.equal_on_inner_box(dual, o.ideal_points(expect), 2)) {
                c.pass = false;
                c.detail = "oracle dual mismatch on " + a.to_string();
                return;
            }
        }
    }
    {
        CheckResult& c = add("radical_is_smallest_prime");
        Rng rng(opts.seed + 16);
        for (long n = 0; n < opts.cases; ++n, ++c.cases) {
            const ValueGroup& g = kGroups[rng.range(0, 5)];
            Cut a = random_cut(rng, g, 2, true);
            if (is_unit(a, g) || !is_integral(a, g)) continue;
            Cut r = radical_local(a, g);
            bool ok = cut_contains(r, a) && radical_local(r, g) == r &&
                      radical_local(combine_local(CombineKind::Product, a, a, g), g) == r;
            if (!ok) {
                c.pass = false;
                c.detail = "radical law failed on " + a.to_string();
                return;
            }
        }
    }
}

// --------------------------------------------------------------- hlocal --

std::vector<MaxId> classification_factors(const DomainPresentation& d, const GlobalIdeal& i) {
    std::vector<MaxId> out;
    for (const auto& [m, _] : i.locals)
        if (classify_max(d, i, m) == MaxClass::InM) out.push_back(m);
    return out;
}

void suite_hlocal(RunReport& rep, const SuiteOptions& opts) {
    auto add = [&](const std::string& name) -> CheckResult& {
        rep.checks.push_back({name, true, 0, "", ""});
        return rep.checks.back();
    };
    auto gen = [](Rng& rng) { return random_hlocal_presentation(rng, 8); };

    run_property(add("strong_factorization_certificates"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     Factorization f = strong_factorize(d, is[0]);
                     if (!f.certificate.product_matches) return "certificate product mismatch";
                     if (!f.certificate.irredundant) return "redundant factor";
                     if (f.factors != classification_factors(d, is[0]))
                         return "factors differ from the classification set";
                     if (f.divisorial_part != v_closure(d, is[0]))
                         return "divisorial part is not the closure";
                     return "";
                 });

    run_property(add("closure_is_stable_on_intersections"), opts, opts.cases, gen, 2, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     GlobalIdeal lhs =
                         v_closure(d, combine_global(CombineKind::Intersect, d, is[0], is[1]));
                     GlobalIdeal rhs = combine_global(CombineKind::Intersect, d,
                                                      v_closure(d, is[0]), v_closure(d, is[1]));
                     return lhs == rhs ? "" : "closure does not distribute over intersection";
                 });

    run_property(add("closure_distributes_over_sums"), opts, opts.cases, gen, 2, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     GlobalIdeal lhs = v_closure(d, combine_global(CombineKind::Sum, d, is[0], is[1]));
                     GlobalIdeal rhs = combine_global(CombineKind::Sum, d, v_closure(d, is[0]),
                                                      v_closure(d, is[1]));
                     if (lhs != rhs) return "closure of the sum differs";
                     GlobalIdeal a = v_closure(d, is[0]);
                     GlobalIdeal b = v_closure(d, is[1]);
                     GlobalIdeal s = combine_global(CombineKind::Sum, d, a, b);
                     if (v_closure(d, s) != s) return "sum of divisorial ideals not divisorial";
                     return "";
                 });

    run_property(add("divisorial_iff_locally_divisorial"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     bool global = v_closure(d, is[0]) == is[0];
                     bool local = true;
                     for (const auto& [m, c] : is[0].locals)
                         local = local &&
                                 classify_local(c, d.group(m)) != LocalClass::Nondivisorial;
                     return global == local ? "" : "local/global divisoriality mismatch";
                 });

    run_property(
        add("predicted_factorizations_match_direct"), opts, opts.cases, gen, 2, true,
        [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
            struct KindCase {
                PredictKind kind;
                CombineKind combine;
                bool binary;
            };
            const KindCase kinds[] = {{PredictKind::Product, CombineKind::Product, true},
                                      {PredictKind::Intersection, CombineKind::Intersect, true},
                                      {PredictKind::Sum, CombineKind::Sum, true},
                                      {PredictKind::Radical, CombineKind::Product, false},
                                      {PredictKind::Trace, CombineKind::Product, false}};
            for (const auto& k : kinds) {
                std::optional<GlobalIdeal> j;
                if (k.binary) j = is[1];
                Factorization pf = predict_factorization(k.kind, d, is[0], j);
                if (!pf.certificate.ok()) return "predicted certificate failed";
                GlobalIdeal direct;
                if (k.binary)
                    direct = combine_global(k.combine, d, is[0], is[1]);
                else if (k.kind == PredictKind::Radical)
                    direct = radical_global(d, is[0]);
                else
                    direct = combine_global(CombineKind::Product, d, is[0], vdual(d, is[0]));
                Factorization sf = strong_factorize(d, direct);
                if (pf.factors != sf.factors || pf.divisorial_part != sf.divisorial_part)
                    return "prediction differs from direct factorization";
            }
            return "";
        });

    run_property(add("radical_closure_identity"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     GlobalIdeal lhs = v_closure(d, radical_global(d, is[0]));
                     GlobalIdeal rhs = v_closure(d, radical_global(d, v_closure(d, is[0])));
                     return lhs == rhs ? "" : "radical closure identity failed";
                 });

    run_property(
        add("trace_factorization_battery"), opts, opts.cases, gen, 2, true,
        [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
            const GlobalIdeal& i = is[0];
            GlobalIdeal inv = vdual(d, i);
            GlobalIdeal trace = combine_global(CombineKind::Product, d, i, inv);
            GlobalIdeal iv = v_closure(d, i);
            GlobalIdeal rhs = combine_global(CombineKind::Product, d, iv, inv);
            std::vector<MaxId> factors = classification_factors(d, i);
            for (const auto& m : factors)
                rhs = combine_global(CombineKind::Product, d, rhs, maximal_ideal_of(d, m));
            if (trace != rhs) return "trace does not factor through the closure";
            for (const auto& m : factors) {
                Cut t = effective_cut(d, trace, m);
                const ValueGroup& g = d.group(m);
                if (t != maximal_cut(g)) return "trace not locally maximal at a factor";
                if (radical_local(t, g) != maximal_cut(g)) return "factor not minimal over trace";
            }
            // finitely generated companion: one generator per factor, with
            // the closure boundary at its own slot and a group-realizable
            // value inside the closure elsewhere
            if (!factors.empty()) {
                GlobalIdeal j;
                for (const auto& [m, c] : iv.locals) {
                    const ValueGroup& g = d.group(m);
                    bool own = std::find(factors.begin(), factors.end(), m) != factors.end();
                    if (own) {
                        j.locals.emplace(m, v_closure_local(effective_cut(d, i, m), g));
                        continue;
                    }
                    std::vector<QuadExt> deep;
                    deep.reserve(c.boundary.size());
                    for (std::size_t b = 0; b < c.boundary.size(); ++b)
                        deep.push_back(QuadExt(Rat(c.boundary[b].ceil() + 1)));
                    if (c.minus_inf) deep.push_back(QuadExt(Rat(0)));
                    Cut cut = make_cut(true, deep[0]);
                    if (g.rank() == 2) cut = make_cut(true, deep[0], deep[1]);
                    j.locals.emplace(m, normalize(std::move(cut), g));
                }
                j = normalize_ideal(d, j);
                if (!ideal_contains(d, iv, j)) return "companion escapes the closure";
                GlobalIdeal sum = combine_global(CombineKind::Sum, d, i, j);
                if (sum != iv) return "companion does not recover the closure";
                GlobalIdeal meet = v_closure(d, combine_global(CombineKind::Intersect, d, i, j));
                if (meet != j) return "closed intersection differs from the companion";
            }
            // for every closed multiple below the closure: (I meet B)^v = B^v
            GlobalIdeal b = combine_global(CombineKind::Product, d, iv, is[1]);
            GlobalIdeal lhs = v_closure(d, combine_global(CombineKind::Intersect, d, i, b));
            if (lhs != v_closure(d, b)) return "closed intersection differs below the closure";
            return "";
        });

    run_property(add("double_dual_is_closure"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     return vdual(d, vdual(d, is[0])) == v_closure(d, is[0])
                                ? ""
                                : "double dual differs from closure";
                 });

    run_property(add("decomposition_product_is_closure"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     DivisorialDecomposition dec = decompose_divisorial(d, is[0]);
                     GlobalIdeal prod = combine_global(
                         CombineKind::Product, d,
                         combine_global(CombineKind::Product, d, dec.invertible_part,
                                        dec.mprime_part),
                         dec.n_part);
                     if (prod != v_closure(d, is[0])) return "decomposition product mismatch";
                     if (!ideal_is_unit(dec.invertible_part) &&
                         !trace_and_invertibility(d, dec.invertible_part).invertible)
                         return "invertible part not invertible";
                     return "";
                 });

    run_property(
        add("fractional_factorization_divides_out_denominator"), opts, opts.cases, gen, 1, true,
        [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
            // turn the integral sample into a fractional one
            GlobalIdeal f = is[0];
            if (f.locals.empty()) return "";
            auto it = f.locals.begin();
            const ValueGroup& g = d.group(it->first);
            std::vector<QuadExt> by(static_cast<std::size_t>(g.rank()), QuadExt(Rat(0)));
            by[0] = QuadExt(Rat(-3));
            f = shift_ideal(d, f, {{it->first, by}});
            Factorization ff = strong_factorize(d, f);
            Factorization fi = strong_factorize(d, integral_part(d, f));
            if (ff.factors != fi.factors) return "fractional factors differ from integral part";
            if (!ff.certificate.ok()) return "fractional certificate failed";
            return "";
        });

    // Oracle agreement on discretizable instances
    {
        CheckResult& c = add("oracle_agreement_on_discrete_presentations");
        Rng rng(opts.seed + 31);
        long cases = std::min<long>(opts.cases, 40);
        for (long n = 0; n < cases; ++n, ++c.cases) {
            DomainPresentation d;
            int slots = rng.range(1, 2);
            for (int s = 0; s < slots; ++s)
                d.slots.emplace("S" + std::to_string(s),
                                rng.chance(1, 2) ? ValueGroup(LevelTag::Z)
                                                 : ValueGroup(LevelTag::Z, LevelTag::Z));
            GlobalIdeal i;
            for (const auto& [m, g] : d.slots) {
                if (g.rank() == 1) {
                    i.locals.emplace(m, make_cut(true, QuadExt(Rat(rng.range(0, 2)))));
                } else {
                    Cut cu = rng.chance(1, 3)
                                 ? make_minus_inf_cut(true, QuadExt(Rat(rng.range(1, 2))))
                                 : make_cut(true, QuadExt(Rat(rng.range(0, 2))),
                                            QuadExt(Rat(rng.range(-1, 2))));
                    i.locals.emplace(m, normalize(std::move(cu), g));
                }
            }
            i = normalize_ideal(d, std::move(i));
            if (!ideal_is_integral(d, i)) continue;
            GlobalIdeal via_oracle = v_closure_oracle(d, i, opts.bound);
            if (via_oracle != v_closure(d, i)) {
                c.pass = false;
                c.detail = "oracle disagrees with slotwise closure";
                c.counterexample = dump_case(d, {i});
                return;
            }
        }
    }

    // Shared-prime presentations: a locally divisorial, nondivisorial ideal
    {
        CheckResult& c = add("shared_prime_breaks_local_to_global_divisoriality");
        Rng rng(opts.seed + 32);
        long cases = std::min<long>(opts.cases, 25);
        for (long n = 0; n < cases; ++n, ++c.cases) {
            DomainPresentation d = random_shared_presentation(rng);
            const auto& sp = d.shared_primes.front();
            MaxId m = *sp.members.begin();
            GlobalIdeal i;
            int level1 = rng.range(1, 2);
            for (const auto& member : sp.members)
                i.locals.emplace(member,
                                 make_cut(true, QuadExt(Rat(level1)), QuadExt(Rat(0))));
            i = normalize_ideal(d, std::move(i));
            GlobalIdeal j = contract_localization(d, i, m);
            for (const auto& [slot, cut] : j.locals) {
                if (classify_local(cut, d.group(slot)) == LocalClass::Nondivisorial) {
                    c.pass = false;
                    c.detail = "contraction not locally divisorial";
                    c.counterexample = dump_case(d, {i, j});
                    return;
                }
            }
            GlobalIdeal closure = v_closure_oracle(d, j, opts.bound);
            if (closure == j || !ideal_contains(d, closure, j)) {
                c.pass = false;
                c.detail = "contraction unexpectedly divisorial on a shared presentation";
                c.counterexample = dump_case(d, {i, j});
                return;
            }
        }
    }
}

// -------------------------------------------------------------- semistar --

void suite_semistar(RunReport& rep, const SuiteOptions& opts) {
    auto add = [&](const std::string& name) -> CheckResult& {
        rep.checks.push_back({name, true, 0, "", ""});
        return rep.checks.back();
    };
    auto gen = [](Rng& rng) { return random_hlocal_presentation(rng, 4); };

    run_property(add("stable_closure_equals_divisorial_closure"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     return vbar_closure(d, is[0]) == v_closure(d, is[0])
                                ? ""
                                : "stable closure differs from divisorial closure";
                 });

    run_property(add("stable_closure_distributes_over_intersections"), opts,
                 std::max<long>(opts.cases, 500), gen, 2, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     GlobalIdeal lhs =
                         vbar_closure(d, combine_global(CombineKind::Intersect, d, is[0], is[1]));
                     GlobalIdeal rhs = combine_global(CombineKind::Intersect, d,
                                                      vbar_closure(d, is[0]), vbar_closure(d, is[1]));
                     return lhs == rhs ? "" : "stability failed";
                 });

    run_property(add("stable_closure_bounded_by_divisorial"), opts, opts.cases, gen, 1, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
                     return ideal_contains(d, v_closure(d, is[0]), vbar_closure(d, is[0]))
                                ? ""
                                : "stable closure escaped the divisorial closure";
                 });

    run_property(
        add("localizing_system_laws"), opts, opts.cases, gen, 2, true,
        [](const DomainPresentation& d, const std::vector<GlobalIdeal>& is) -> std::string {
            LocalizingSystemView view(d);
            if (view.contains(is[0])) {
                GlobalIdeal bigger = combine_global(CombineKind::Sum, d, is[0], is[1]);
                if (!view.contains(bigger)) return "membership not upward closed";
                if (view.contains(is[1]) &&
                    !view.contains(combine_global(CombineKind::Product, d, is[0], is[1])))
                    return "membership not multiplicative";
            }
            bool sp_member = vsp_closure(d, is[0]) == vsp_closure(d, unit_ideal());
            if (sp_member != view.complement_contains(is[0]))
                return "spectral system differs from the complement system";
            return "";
        });

    run_property(add("five_conditions_mutually_equal"), opts, std::min<long>(opts.cases, 40),
                 gen, 0, true,
                 [](const DomainPresentation& d, const std::vector<GlobalIdeal>&) -> std::string {
                     Pr2Report r = check_pr2(d);
                     return r.consistent() ? "" : "the five conditions disagree";
                 });

    {
        CheckResult& c = add("condition_battery_reference_presentations");
        DomainPresentation all_z;
        all_z.slots.emplace("A", ValueGroup(LevelTag::Z));
        all_z.slots.emplace("B", ValueGroup(LevelTag::Z, LevelTag::Z));
        DomainPresentation single_q;
        single_q.slots.emplace("M", ValueGroup(LevelTag::Q));
        DomainPresentation mixed_discrete;
        mixed_discrete.slots.emplace("A", ValueGroup(LevelTag::Z));
        mixed_discrete.slots.emplace("B", ValueGroup(LevelTag::Q, LevelTag::Z));
        Pr2Report rz = check_pr2(all_z);
        Pr2Report rq = check_pr2(single_q);
        Pr2Report rm = check_pr2(mixed_discrete);
        c.cases = 3;
        if (!(rz.consistent() && rz.all_hold() && rq.consistent() && !rq.all_hold() &&
              rm.consistent() && rm.all_hold())) {
            c.pass = false;
            c.detail = "reference presentations gave unexpected verdicts";
        }
    }
}

// -------------------------------------------------------------- examples --

void suite_examples(RunReport& rep, const SuiteOptions& opts) {
    const std::pair<FixtureName, const char*> fixtures[] = {
        {FixtureName::InfNonDiv, "infnondiv"},
        {FixtureName::SumNotDiv, "sumnotdiv"},
        {FixtureName::NoFac, "nofac"},
        {FixtureName::DivNotLoc, "divnotloc"},
    };
    for (const auto& [name, label] : fixtures) {
        CheckResult c{std::string("fixture_") + label, true, 0, "", ""};
        try {
            FixtureReport lo = run_fixture(name, opts.truncation);
            FixtureReport hi = run_fixture(name, opts.truncation + 2);
            c.cases = static_cast<long>(lo.checks.size());
            if (!lo.all_pass()) {
                c.pass = false;
                for (const auto& [check, ok] : lo.checks)
                    if (!ok) c.detail += check + " failed; ";
            }
            if (lo.verdicts() != hi.verdicts()) {
                c.pass = false;
                c.detail += "verdicts unstable between truncation levels";
            }
            c.counterexample = c.pass ? "" : fixture_json(lo).dump();
        } catch (const Error& e) {
            c.pass = false;
            c.detail = e.what();
        }
        rep.checks.push_back(std::move(c));
    }
}

}  // namespace

RunReport run_suite(const std::string& suite, const SuiteOptions& opts) {
    RunReport rep;
    rep.suite = suite;
    rep.seed = opts.seed;
    rep.requested_cases = opts.cases;
    rep.truncation = opts.truncation;
    rep.bound = opts.bound;
    auto start = std::chrono::steady_clock::now();
    if (suite == "local" || suite == "all") suite_local(rep, opts);
    if (suite == "hlocal" || suite == "all") suite_hlocal(rep, opts);
    if (suite == "semistar" || suite == "all") suite_semistar(rep, opts);
    if (suite == "examples" || suite == "all") suite_examples(rep, opts);
    if (rep.checks.empty() && suite != "all")
        throw Error("unknown suite: " + suite + " (expected local|hlocal|semistar|examples|all)");
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

Json report_json(const RunReport& r, bool include_timings) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases"] = r.requested_cases;
    j["truncation"] = r.truncation;
    j["bound"] = r.bound;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["cases"] = c.cases;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
        checks.push_back(std::move(cj));
    }
    j["checks"] = checks;
    j["all_pass"] = r.all_pass();
    j["timings"] = Json::object();
    j["timings"]["total_ms"] = include_timings ? r.elapsed_ms : 0.0;
    return j;
}

}  // namespace prufer
