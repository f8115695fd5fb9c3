// Command-line front end: factorization, closures, ideal arithmetic and the
// verification suites over presentation files.

#include <CLI11.hpp>

#include "prufer/oracle.hpp"
#include "prufer/semistar.hpp"
#include "prufer/suites.hpp"

#include <iostream>

namespace {

using namespace prufer;

constexpr int kExitVerdictFailure = 1;
constexpr int kExitInputError = 2;

const GlobalIdeal& named_ideal(const PresentationFile& f, const std::string& name) {
    auto it = f.ideals.find(name);
    if (it == f.ideals.end()) throw Error("no ideal named '" + name + "' in the file");
    return it->second;
}

const ADIdeal& named_family_ideal(const PresentationFile& f, const std::string& name) {
    auto it = f.family_ideals.find(name);
    if (it == f.family_ideals.end()) throw Error("no ideal named '" + name + "' in the file");
    return it->second;
}

void emit(const Json& j, const std::string& format, const std::string& table_text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table_text;
}

int cmd_factor(const std::string& path, const std::string& ideal, const std::string& format) {
    PresentationFile f = load_presentation(path);
    if (f.is_finite()) {
        Factorization fact = strong_factorize(f.finite(), named_ideal(f, ideal));
        emit(factorization_json(fact), format, factorization_table(fact));
        return fact.certificate.ok() ? 0 : kExitVerdictFailure;
    }
    WeakFactorization w = weak_factorize(f.family(), named_family_ideal(f, ideal));
    Json j = weak_factorization_json(f.family(), w);
    std::string table = "exponents:";
    if (w.exponents.empty()) table += " (none)";
    for (const auto& [fam, t] : w.exponents)
        table += " " + f.family().families[static_cast<std::size_t>(fam)].name + "^" +
                 std::to_string(t);
    table += std::string("\ncertificate: ") + (w.certificate_ok ? "ok" : "FAIL") + "\n";
    emit(j, format, table);
    return w.certificate_ok ? 0 : kExitVerdictFailure;
}

int cmd_closure(const std::string& path, const std::string& ideal, int bound,
                const std::string& format) {
    PresentationFile f = load_presentation(path);
    Json j;
    std::string table;
    if (f.is_finite()) {
        const DomainPresentation& d = f.finite();
        const GlobalIdeal& i = named_ideal(f, ideal);
        GlobalIdeal closed = d.is_hlocal() ? v_closure(d, i) : v_closure_oracle(d, i, bound);
        j["closure"] = ideal_json(closed);
        j["divisorial"] = closed == i;
        table = "closure:\n";
        if (closed.locals.empty()) table += "  (unit ideal)\n";
        for (const auto& [m, c] : closed.locals) table += "  " + m + ": " + c.to_string() + "\n";
        table += std::string("input divisorial: ") + (closed == i ? "yes" : "no") + "\n";
    } else {
        const FamilyPresentation& p = f.family();
        ValuationProfile prof = profile_of(p, named_family_ideal(f, ideal));
        ValuationProfile closed = profile_v_closure(p, prof);
        j["closure"] = profile_json(p, closed);
        j["divisorial"] = closed == prof;
        table = "closure:\n";
        for (std::size_t fam = 0; fam < closed.families.size(); ++fam) {
            const auto& pf = closed.families[fam];
            table += "  " + p.families[fam].name + ": window";
            for (const auto& w : pf.window) table += " " + rat_to_string(w);
            table += ", limit " + rat_to_string(pf.limit.boundary) +
                     (pf.limit.attained ? " attained" : " open") + "\n";
        }
        table += std::string("input divisorial: ") + (closed == prof ? "yes" : "no") + "\n";
    }
    emit(j, format, table);
    return 0;
}

int cmd_op(const std::string& kind, const std::string& path, const std::string& lhs,
           const std::string& rhs, const std::string& format) {
    PresentationFile f = load_presentation(path);
    if (!f.is_finite()) throw Error("op works on finite presentations");
    const DomainPresentation& d = f.finite();
    const GlobalIdeal& i = named_ideal(f, lhs);

    GlobalIdeal result;
    Json j;
    if (kind == "product" || kind == "sum" || kind == "intersect") {
        if (rhs.empty()) throw Error("op --kind " + kind + " needs two ideals");
        CombineKind ck = kind == "product" ? CombineKind::Product
                                           : (kind == "sum" ? CombineKind::Sum
                                                            : CombineKind::Intersect);
        result = combine_global(ck, d, i, named_ideal(f, rhs));
    } else if (kind == "radical") {
        result = radical_global(d, i);
    } else if (kind == "trace") {
        TraceReport t = trace_and_invertibility(d, i);
        result = t.trace;
        j["invertible"] = t.invertible;
        j["closure_invertible"] = t.iv_invertible;
    } else {
        throw Error("unknown op kind: " + kind);
    }
    j["result"] = ideal_json(result);
    std::string table = "result:\n";
    if (result.locals.empty()) table += "  (unit ideal)\n";
    for (const auto& [m, c] : result.locals) table += "  " + m + ": " + c.to_string() + "\n";
    emit(j, format, table);
    return 0;
}

int cmd_fixture(const std::string& name, int truncation, const std::string& format) {
    FixtureName which;
    if (name == "infnondiv")
        which = FixtureName::InfNonDiv;
    else if (name == "sumnotdiv")
        which = FixtureName::SumNotDiv;
    else if (name == "nofac")
        which = FixtureName::NoFac;
    else if (name == "divnotloc")
        which = FixtureName::DivNotLoc;
    else
        throw Error("unknown fixture: " + name);
    FixtureReport rep = run_fixture(which, truncation);
    if (format == "json") {
        std::cout << fixture_json(rep).dump(2) << "\n";
    } else {
        for (const auto& [check, ok] : rep.checks)
            std::cout << (ok ? "PASS " : "FAIL ") << check << "\n";
    }
    return rep.all_pass() ? 0 : kExitVerdictFailure;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& format) {
    RunReport rep = run_suite(suite, opts);
    if (format == "json") {
        std::cout << report_json(rep, opts.include_timings).dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
            if (!c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
            if (!c.counterexample.empty())
                std::cout << "counterexample:\n" << c.counterexample << "\n";
        }
        std::cout << (rep.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    }
    return rep.all_pass() ? 0 : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"valuation-theoretic ideal factorization engine"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

    std::string path, ideal_a, ideal_b, kind, suite = "all";
    SuiteOptions opts;

    auto* factor = app.add_subcommand("factor", "strong or weak factorization of a named ideal");
    factor->add_option("file", path)->required();
    factor->add_option("ideal", ideal_a)->required();

    auto* closure = app.add_subcommand("closure", "divisorial closure of a named ideal");
    closure->add_option("file", path)->required();
    closure->add_option("ideal", ideal_a)->required();
    closure->add_option("--bound", opts.bound, "exhaustive-search bound for shared presentations");

    auto* op = app.add_subcommand("op", "ideal arithmetic");
    op->add_option("--kind", kind, "product|sum|intersect|radical|trace")->required();
    op->add_option("file", path)->required();
    op->add_option("lhs", ideal_a)->required();
    op->add_option("rhs", ideal_b);

    std::string fixture_name;
    auto* fixture = app.add_subcommand("fixture", "run one countable-family fixture");
    fixture->add_option("name", fixture_name, "infnondiv|sumnotdiv|nofac|divnotloc")->required();
    fixture->add_option("--trunc", opts.truncation, "truncation level K");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite, "local|hlocal|semistar|examples|all");
    verify->add_option("--seed", opts.seed);
    verify->add_option("--cases", opts.cases);
    verify->add_option("--trunc", opts.truncation);
    verify->add_option("--bound", opts.bound);
    bool no_timings = false;
    verify->add_flag("--no-timings", no_timings, "zero out timing fields for byte-stable reports");

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor->parsed()) return cmd_factor(path, ideal_a, format);
        if (closure->parsed()) return cmd_closure(path, ideal_a, opts.bound, format);
        if (op->parsed()) return cmd_op(kind, path, ideal_a, ideal_b, format);
        if (fixture->parsed()) return cmd_fixture(fixture_name, opts.truncation, format);
        if (verify->parsed()) {
            opts.include_timings = !no_timings;
            return cmd_verify(suite, opts, format);
        }
    } catch (const prufer::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
