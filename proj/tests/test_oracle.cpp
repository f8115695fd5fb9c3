#include <doctest.h>

#include "prufer/hlocal.hpp"
#include "prufer/oracle.hpp"

using namespace prufer;

namespace {

QuadExt q(long n) { return QuadExt(Rat(n)); }
Cut att(QuadExt b) { return make_cut(true, std::move(b)); }

DomainPresentation two_z_slots() {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Z));
    d.slots.emplace("B", ValueGroup(LevelTag::Z));
    d.validate();
    return d;
}

DomainPresentation shared_zz() {
    DomainPresentation d;
    d.slots.emplace("M", ValueGroup(LevelTag::Z, LevelTag::Z));
    d.slots.emplace("N", ValueGroup(LevelTag::Z, LevelTag::Z));
    d.shared_primes.push_back({"P", {"M", "N"}});
    d.validate();
    return d;
}

}  // namespace

TEST_CASE("oracle closure matches slotwise closure on h-local inputs") {
    DomainPresentation d = two_z_slots();
    GlobalIdeal i = make_ideal(d, {{"A", att(q(2))}, {"B", att(q(1))}});
    CHECK(v_closure_oracle(d, i, 6) == v_closure(d, i));
    GlobalIdeal princ = make_ideal(d, {{"A", att(q(3))}});
    CHECK(v_closure_oracle(d, princ, 6) == princ);
    CHECK(v_closure_oracle(d, unit_ideal(), 6) == unit_ideal());
}

TEST_CASE("oracle rejects dense groups and oversized boxes") {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    CHECK_THROWS_AS(Oracle(d, 6), Error);
}

TEST_CASE("oracle dual of a principal ideal is the shifted cone") {
    DomainPresentation d = two_z_slots();
    Oracle o(d, 4);
    // generator (2, 1)
    std::vector<std::vector<int>> gens = {{2, 1}};
    auto dual = o.dual_of(gens);
    for (const auto& u : dual) {
        CHECK(u[0] >= -2);
        CHECK(u[1] >= -1);
    }
    auto mins = o.minimal_points(dual);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == std::vector<int>{-2, -1});
}

TEST_CASE("oracle dual matches the closed-form dual on h-local rank-2 instances") {
    DomainPresentation d;
    d.slots.emplace("M", ValueGroup(LevelTag::Z, LevelTag::Z));
    ValueGroup zz(LevelTag::Z, LevelTag::Z);
    Oracle o(d, 6);
    std::vector<Cut> cuts = {make_cut(true, q(1), q(2)),
                             make_cut(true, q(2), q(-1)),
                             make_minus_inf_cut(true, q(1)),
                             make_minus_inf_cut(true, q(2))};
    for (const auto& c : cuts) {
        GlobalIdeal i;
        i.locals.emplace("M", normalize(c, zz));
        i = normalize_ideal(d, std::move(i));
        auto gens = o.minimal_points(o.ideal_points(i));
        auto dual_pts = o.dual_of(gens, 1);
        Cut closed_form = dual_cut(c, zz);
        GlobalIdeal dual_ideal;
        if (!is_unit(closed_form, zz)) dual_ideal.locals.emplace("M", closed_form);
        CHECK(o.equal_on_inner_box(dual_pts, o.ideal_points(dual_ideal), 2));
    }
}

TEST_CASE("shared-prime contraction is locally divisorial but not divisorial") {
    DomainPresentation s = shared_zz();
    ValueGroup zz(LevelTag::Z, LevelTag::Z);
    GlobalIdeal i = make_ideal(
        s, {{"M", make_cut(true, q(1), q(0))}, {"N", make_cut(true, q(1), q(0))}});
    GlobalIdeal j = contract_localization(s, i, "M");
    // locally divisorial everywhere
    for (const auto& [m, cut] : j.locals)
        CHECK(classify_local(cut, s.group(m)) != LocalClass::Nondivisorial);
    // yet the closure is strictly larger
    GlobalIdeal jv = v_closure_oracle(s, j, 6);
    CHECK(jv != j);
    CHECK(ideal_contains(s, jv, j));
}

TEST_CASE("the contraction dual equals the shared prime times the input dual") {
    DomainPresentation s = shared_zz();
    GlobalIdeal i = make_ideal(
        s, {{"M", make_cut(true, q(1), q(0))}, {"N", make_cut(true, q(1), q(0))}});
    GlobalIdeal j = contract_localization(s, i, "M");
    Oracle o(s, 6);
    auto j_dual = o.dual_of(o.minimal_points(o.ideal_points(j)), 1);
    auto i_dual = o.dual_of(o.minimal_points(o.ideal_points(i)), 1);
    // the largest prime inside both maximal ideals
    GlobalIdeal p = make_ideal(s, {{"M", height_one_prime_cut(s.group("M"))},
                                   {"N", height_one_prime_cut(s.group("N"))}});
    auto prod = o.product_points(o.ideal_points(p), i_dual);
    CHECK(o.equal_on_inner_box(j_dual, prod, 3));
}
