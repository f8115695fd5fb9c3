#include <doctest.h>

#include "prufer/semistar.hpp"

using namespace prufer;

namespace {

QuadExt q(long num, long den = 1) { return QuadExt(Rat(num, den)); }
Cut att(QuadExt b) { return make_cut(true, std::move(b)); }
Cut openc(QuadExt b) { return make_cut(false, std::move(b)); }

DomainPresentation single_q() {
    DomainPresentation d;
    d.slots.emplace("M", ValueGroup(LevelTag::Q));
    return d;
}

DomainPresentation single_z() {
    DomainPresentation d;
    d.slots.emplace("M", ValueGroup(LevelTag::Z));
    return d;
}

DomainPresentation all_z_mixed_rank() {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Z));
    d.slots.emplace("B", ValueGroup(LevelTag::Z, LevelTag::Z));
    d.slots.emplace("C", ValueGroup(LevelTag::Q, LevelTag::Z));
    return d;
}

DomainPresentation mixed_qz() {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    d.slots.emplace("B", ValueGroup(LevelTag::Z));
    return d;
}

}  // namespace

TEST_CASE("localizing system membership and lattice laws") {
    DomainPresentation d = mixed_qz();
    LocalizingSystemView view(d);
    GlobalIdeal m_only = make_ideal(d, {{"A", openc(q(0))}});
    CHECK(view.contains(m_only));  // closure of a nondivisorial maximal slot is R
    GlobalIdeal deeper = make_ideal(d, {{"A", openc(q(1))}});
    CHECK(!view.contains(deeper));
    GlobalIdeal z_part = make_ideal(d, {{"B", att(q(1))}});
    CHECK(!view.contains(z_part));

    auto grid = sample_ideal_grid(d);
    for (const auto& i : grid) {
        for (const auto& j : grid) {
            // upward closed
            if (view.contains(i) && ideal_contains(d, j, i)) CHECK(view.contains(j));
            // multiplicative
            if (view.contains(i) && view.contains(j))
                CHECK(view.contains(combine_global(CombineKind::Product, d, i, j)));
        }
    }
}

TEST_CASE("the stable closure equals the divisorial closure slot by slot") {
    DomainPresentation d = single_q();
    GlobalIdeal xm = make_ideal(d, {{"M", openc(q(1))}});
    CHECK(vbar_closure(d, xm) == v_closure(d, xm));
    CHECK(effective_cut(d, vbar_closure(d, xm), "M") == att(q(1)));
    GlobalIdeal divisorial = make_ideal(d, {{"M", att(q(2))}});
    CHECK(vbar_closure(d, divisorial) == divisorial);
    GlobalIdeal m = make_ideal(d, {{"M", openc(q(0))}});
    CHECK(ideal_is_unit(vbar_closure(d, m)));
}

TEST_CASE("stable closure distributes over intersections on the grid") {
    DomainPresentation d = mixed_qz();
    auto grid = sample_ideal_grid(d);
    for (const auto& e : grid)
        for (const auto& f : grid) {
            GlobalIdeal lhs = vbar_closure(d, combine_global(CombineKind::Intersect, d, e, f));
            GlobalIdeal rhs = combine_global(CombineKind::Intersect, d, vbar_closure(d, e),
                                             vbar_closure(d, f));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("spectral closure per presentation shape") {
    // single discrete slot: the spectral closure is the identity
    DomainPresentation z = single_z();
    for (const auto& i : sample_ideal_grid(z)) CHECK(vsp_closure(z, i) == embed(z, i));

    // single dense slot: empty divisorial spectrum, whole-field sentinel
    DomainPresentation qd = single_q();
    GlobalIdeal any = make_ideal(qd, {{"M", att(q(3))}});
    SemistarImage img = vsp_closure(qd, any);
    CHECK(img.whole_field(qd));

    // mixed: constraints exactly at the divisorial slots
    DomainPresentation mx = mixed_qz();
    GlobalIdeal i = make_ideal(mx, {{"A", att(q(1))}, {"B", att(q(2))}});
    SemistarImage restricted = vsp_closure(mx, i);
    CHECK(restricted.constrained.count("B"));
    CHECK(!restricted.constrained.count("A"));
    CHECK(restricted.constrained.at("B") == att(q(2)));
}

TEST_CASE("complement system matches divisorial-prime avoidance") {
    DomainPresentation d = all_z_mixed_rank();
    LocalizingSystemView view(d);
    // every maximal ideal here is divisorial, so only the unit ideal escapes
    for (const auto& i : sample_ideal_grid(d))
        CHECK(view.complement_contains(i) == ideal_is_unit(i));
    CHECK(view.spectrum().size() == 5);  // three maximals + two height-1 primes
}

TEST_CASE("five-condition battery: all-discrete true, dense false, mutual consistency") {
    Pr2Report all_z = check_pr2(all_z_mixed_rank());
    CHECK(all_z.consistent());
    CHECK(all_z.all_hold());

    Pr2Report dense = check_pr2(single_q());
    CHECK(dense.consistent());
    CHECK(!dense.all_hold());

    Pr2Report mixed = check_pr2(mixed_qz());
    CHECK(mixed.consistent());
    CHECK(!mixed.all_hold());

    Pr2Report dvr = check_pr2(single_z());
    CHECK(dvr.consistent());
    CHECK(dvr.all_hold());

    // branched idempotent maximal (dense second level): conditions fail
    DomainPresentation zq;
    zq.slots.emplace("A", ValueGroup(LevelTag::Z, LevelTag::Q));
    Pr2Report branched = check_pr2(zq);
    CHECK(branched.consistent());
    CHECK(!branched.all_hold());
}
