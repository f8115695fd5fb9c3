#include "prufer/hlocal.hpp"

#include <algorithm>

namespace prufer {

namespace {

void require_hlocal(const DomainPresentation& d, const char* op) {
    if (!d.is_hlocal()) throw Error(std::string(op) + ": presentation is not h-local");
}

bool slot_max_nondivisorial(const ValueGroup& g) { return !g.last_discrete(); }

GlobalIdeal slotwise(const DomainPresentation& d, const GlobalIdeal& i, Cut (*f)(const Cut&, const ValueGroup&)) {
    GlobalIdeal r;
    for (const auto& [m, c] : i.locals) r.locals.emplace(m, f(c, d.group(m)));
    return normalize_ideal(d, std::move(r));
}

}  // namespace

MaxClass classify_max(const DomainPresentation& d, const GlobalIdeal& i, const MaxId& m) {
    const ValueGroup& g = d.group(m);
    Cut c = effective_cut(d, i, m);
    if (!is_integral(c, g)) throw Error("classify_max: fractional cut at " + m);
    if (is_unit(c, g)) return MaxClass::NotContaining;
    if (!slot_max_nondivisorial(g)) return MaxClass::InN;
    return classify_local(c, g) == LocalClass::Nondivisorial ? MaxClass::InM : MaxClass::InMprime;
}

GlobalIdeal v_closure(const DomainPresentation& d, const GlobalIdeal& i) {
    require_hlocal(d, "v_closure");
    return slotwise(d, i, &v_closure_local);
}

GlobalIdeal vdual(const DomainPresentation& d, const GlobalIdeal& i) {
    require_hlocal(d, "vdual");
    return slotwise(d, i, &dual_cut);
}

GlobalIdeal combine_global(CombineKind kind, const DomainPresentation& d, const GlobalIdeal& i,
                           const GlobalIdeal& j) {
    GlobalIdeal r;
    std::set<MaxId> support;
    for (const auto& [m, _] : i.locals) support.insert(m);
    for (const auto& [m, _] : j.locals) support.insert(m);
    for (const auto& m : support) {
        const ValueGroup& g = d.group(m);
        r.locals.emplace(m, combine_local(kind, effective_cut(d, i, m), effective_cut(d, j, m), g));
    }
    return normalize_ideal(d, std::move(r));
}

GlobalIdeal radical_global(const DomainPresentation& d, const GlobalIdeal& i) {
    if (!ideal_is_integral(d, i)) throw Error("radical: fractional input");
    GlobalIdeal r;
    for (const auto& [m, c] : i.locals) r.locals.emplace(m, radical_local(c, d.group(m)));
    return normalize_ideal(d, std::move(r));
}

GlobalIdeal colon_global(const DomainPresentation& d, const GlobalIdeal& e, const GlobalIdeal& j) {
    require_hlocal(d, "colon");
    GlobalIdeal r;
    std::set<MaxId> support;
    for (const auto& [m, _] : e.locals) support.insert(m);
    for (const auto& [m, _] : j.locals) support.insert(m);
    for (const auto& m : support) {
        const ValueGroup& g = d.group(m);
        r.locals.emplace(m, cut_quotient(effective_cut(d, e, m), effective_cut(d, j, m), g));
    }
    return normalize_ideal(d, std::move(r));
}

namespace {

GlobalIdeal product_with_maximals(const DomainPresentation& d, GlobalIdeal base,
                                  const std::vector<MaxId>& factors) {
    for (const auto& m : factors)
        base = combine_global(CombineKind::Product, d, base, maximal_ideal_of(d, m));
    return base;
}

Certificate certify(const DomainPresentation& d, const GlobalIdeal& input,
                    const GlobalIdeal& divisorial_part, const std::vector<MaxId>& factors) {
    Certificate cert;
    cert.product_matches = product_with_maximals(d, divisorial_part, factors) == input;
    cert.irredundant = true;
    for (std::size_t k = 0; k < factors.size() && cert.irredundant; ++k) {
        std::vector<MaxId> rest;
        rest.reserve(factors.size() - 1);
        for (std::size_t t = 0; t < factors.size(); ++t)
            if (t != k) rest.push_back(factors[t]);
        if (product_with_maximals(d, divisorial_part, rest) == input) cert.irredundant = false;
    }
    return cert;
}

}  // namespace

Factorization strong_factorize(const DomainPresentation& d, const GlobalIdeal& iraw) {
    require_hlocal(d, "strong_factorize");
    // Fractional ideals: divide out the denominator, factor, shift back.
    auto denom = denominator(d, iraw);
    if (!denom.empty()) {
        GlobalIdeal integral = shift_ideal(d, iraw, denom);
        Factorization f = strong_factorize(d, integral);
        std::map<MaxId, std::vector<QuadExt>> back;
        for (auto& [m, x] : denom) {
            std::vector<QuadExt> neg;
            neg.reserve(x.size());
            for (const auto& v : x) neg.push_back(-v);
            back.emplace(m, std::move(neg));
        }
        f.divisorial_part = shift_ideal(d, f.divisorial_part, back);
        f.certificate = certify(d, iraw, f.divisorial_part, f.factors);
        return f;
    }

    Factorization f;
    f.divisorial_part = v_closure(d, iraw);
    for (const auto& [m, _] : iraw.locals)
        if (classify_max(d, iraw, m) == MaxClass::InM) f.factors.push_back(m);
    std::sort(f.factors.begin(), f.factors.end());
    f.certificate = certify(d, iraw, f.divisorial_part, f.factors);
    return f;
}

namespace {

bool locally_principal_or_unit(const DomainPresentation& d, const GlobalIdeal& i, const MaxId& m) {
    return classify_local(effective_cut(d, i, m), d.group(m)) == LocalClass::DivisorialPrincipal;
}

bool locally_nondiv(const DomainPresentation& d, const GlobalIdeal& i, const MaxId& m) {
    return classify_local(effective_cut(d, i, m), d.group(m)) == LocalClass::Nondivisorial;
}

// Classification is invariant under principal multiples, so fractional
// operands are classified through their integral part.
std::set<MaxId> frak_m(const DomainPresentation& d, const GlobalIdeal& iraw) {
    GlobalIdeal i = integral_part(d, iraw);
    std::set<MaxId> r;
    for (const auto& [m, _] : i.locals)
        if (classify_max(d, i, m) == MaxClass::InM) r.insert(m);
    return r;
}

}  // namespace

Factorization predict_factorization(PredictKind kind, const DomainPresentation& d,
                                    const GlobalIdeal& i, const std::optional<GlobalIdeal>& j) {
    require_hlocal(d, "predict_factorization");
    bool binary = kind == PredictKind::Product || kind == PredictKind::Intersection ||
                  kind == PredictKind::Sum;
    if (binary && !j) throw Error("predict_factorization: second ideal required");

    GlobalIdeal direct;
    std::vector<MaxId> predicted;

    switch (kind) {
        case PredictKind::Product: {
            direct = combine_global(CombineKind::Product, d, i, *j);
            std::set<MaxId> mi = frak_m(d, i), mj = frak_m(d, *j);
            for (const auto& m : mi) {
                if (mj.count(m)) {
                    predicted.push_back(m);  // common nondivisorial slot
                } else if (locally_principal_or_unit(d, *j, m)) {
                    predicted.push_back(m);
                }
            }
            for (const auto& m : mj) {
                if (!mi.count(m) && locally_principal_or_unit(d, i, m)) predicted.push_back(m);
            }
            // divisorial-per-factor slots whose product turns nondivisorial
            for (const auto& [m, c] : direct.locals) {
                if (mi.count(m) || mj.count(m)) continue;
                if (slot_max_nondivisorial(d.group(m)) && !locally_nondiv(d, i, m) &&
                    !locally_nondiv(d, *j, m) && locally_nondiv(d, direct, m))
                    predicted.push_back(m);
            }
            break;
        }
        case PredictKind::Intersection: {
            direct = combine_global(CombineKind::Intersect, d, i, *j);
            std::set<MaxId> mi = frak_m(d, i), mj = frak_m(d, *j);
            for (const auto& m : mi) {
                if (mj.count(m) ||
                    cut_contains(effective_cut(d, *j, m), effective_cut(d, i, m)))
                    predicted.push_back(m);
            }
            for (const auto& m : mj) {
                if (!mi.count(m) &&
                    cut_contains(effective_cut(d, i, m), effective_cut(d, *j, m)))
                    predicted.push_back(m);
            }
            break;
        }
        case PredictKind::Sum: {
            direct = combine_global(CombineKind::Sum, d, i, *j);
            std::set<MaxId> mi = frak_m(d, i), mj = frak_m(d, *j);
            for (const auto& m : mi) {
                if (mj.count(m) ||
                    !cut_contains(effective_cut(d, *j, m), effective_cut(d, i, m)))
                    predicted.push_back(m);
            }
            for (const auto& m : mj) {
                if (!mi.count(m) &&
                    !cut_contains(effective_cut(d, i, m), effective_cut(d, *j, m)))
                    predicted.push_back(m);
            }
            break;
        }
        case PredictKind::Radical: {
            direct = radical_global(d, i);
            for (const auto& [m, c] : i.locals) {
                const ValueGroup& g = d.group(m);
                if (slot_max_nondivisorial(g) && radical_local(c, g) == maximal_cut(g))
                    predicted.push_back(m);
            }
            break;
        }
        case PredictKind::Trace: {
            direct = combine_global(CombineKind::Product, d, i, vdual(d, i));
            std::set<MaxId> mi = frak_m(d, i);
            predicted.assign(mi.begin(), mi.end());
            for (const auto& [m, c] : i.locals) {
                if (mi.count(m)) continue;
                const ValueGroup& g = d.group(m);
                if (!slot_max_nondivisorial(g)) continue;
                Cut local_trace = combine_local(CombineKind::Product, c, dual_cut(c, g), g);
                if (classify_local(local_trace, g) == LocalClass::Nondivisorial)
                    predicted.push_back(m);
            }
            break;
        }
    }

    Factorization f;
    f.divisorial_part = v_closure(d, direct);
    std::sort(predicted.begin(), predicted.end());
    f.factors = std::move(predicted);
    f.certificate = certify(d, direct, f.divisorial_part, f.factors);
    return f;
}

TraceReport trace_and_invertibility(const DomainPresentation& d, const GlobalIdeal& i) {
    require_hlocal(d, "trace_and_invertibility");
    TraceReport r;
    GlobalIdeal inv = vdual(d, i);
    r.trace = combine_global(CombineKind::Product, d, i, inv);
    r.invertible = ideal_is_unit(r.trace);
    r.iv_invertible = ideal_is_unit(combine_global(CombineKind::Product, d, v_closure(d, i), inv));
    return r;
}

GlobalIdeal contract_localization(const DomainPresentation& d, const GlobalIdeal& i,
                                  const MaxId& m) {
    if (!ideal_is_integral(d, i)) throw Error("contract_localization: fractional input");
    const ValueGroup& gm = d.group(m);
    GlobalIdeal r;
    Cut cm = effective_cut(d, i, m);
    if (!is_unit(cm, gm)) r.locals.emplace(m, cm);
    for (const auto& n : d.sharing_set(m)) {
        if (n == m) continue;
        const ValueGroup& gn = d.group(n);
        // The contraction sees exactly the trace at the shared prime.
        Cut relaxed = lift_level1(proj_level1(cm, gm), gn);
        Cut c = combine_local(CombineKind::Intersect, relaxed, unit_cut(gn), gn);
        if (!is_unit(c, gn)) r.locals.emplace(n, std::move(c));
    }
    return normalize_ideal(d, std::move(r));
}

DivisorialDecomposition decompose_divisorial(const DomainPresentation& d, const GlobalIdeal& i) {
    require_hlocal(d, "decompose_divisorial");
    DivisorialDecomposition out;
    for (const auto& [m, c] : i.locals) {
        const ValueGroup& g = d.group(m);
        switch (classify_max(d, i, m)) {
            case MaxClass::InM:
                out.invertible_part.locals.emplace(m, v_closure_local(c, g));
                break;
            case MaxClass::InMprime:
                out.mprime_part.locals.emplace(m, c);
                break;
            case MaxClass::InN:
                out.n_part.locals.emplace(m, c);
                break;
            case MaxClass::NotContaining:
                break;
        }
    }
    out.invertible_part = normalize_ideal(d, std::move(out.invertible_part));
    out.mprime_part = normalize_ideal(d, std::move(out.mprime_part));
    out.n_part = normalize_ideal(d, std::move(out.n_part));
    return out;
}

}  // namespace prufer
