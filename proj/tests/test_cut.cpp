#include <doctest.h>

#include "prufer/cut.hpp"

#include <vector>

using namespace prufer;

namespace {

const ValueGroup Zg(LevelTag::Z);
const ValueGroup Qg(LevelTag::Q);
const ValueGroup ZZ(LevelTag::Z, LevelTag::Z);
const ValueGroup ZQ(LevelTag::Z, LevelTag::Q);
const ValueGroup QQ(LevelTag::Q, LevelTag::Q);

QuadExt q(long num, long den = 1) { return QuadExt(Rat(num, den)); }
QuadExt root2(long num = 1, long den = 1) { return QuadExt(Rat(0), Rat(num, den), 2); }

Cut att(QuadExt b) { return make_cut(true, std::move(b)); }
Cut open(QuadExt b) { return make_cut(false, std::move(b)); }

// Independent rank-1 dual over a sampled rational grid: u belongs to the
// dual iff u + v >= 0 for every grid point v inside the cut. Exact up to
// the grid resolution, which is enough to pin boundary/attainment on the
// cuts below (their data lives on the grid).
struct GridDual {
    std::vector<Rat> grid;
    GridDual() {
        for (long num = -24 * 6; num <= 24 * 6; ++num) grid.emplace_back(num, 24);
    }
    bool member(const Cut& c, const Rat& v) const {
        QuadExt x{v};
        if (x != c.boundary[0]) return x > c.boundary[0];
        return c.attained;
    }
    // Returns (boundary, attained) of the dual restricted to the grid.
    std::pair<Rat, bool> dual_min(const Cut& c) const {
        Rat best;
        bool found = false;
        for (const auto& u : grid) {
            bool ok = true;
            for (const auto& v : grid) {
                if (member(c, v) && u + v < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && (!found || u < best)) {
                best = u;
                found = true;
            }
        }
        REQUIRE(found);
        return {best, true};
    }
};

}  // namespace

TEST_CASE("normalization in discrete levels") {
    CHECK(normalize(open(q(3)), Zg) == att(q(4)));
    CHECK(normalize(att(q(3, 2)), Zg) == att(q(2)));
    CHECK(normalize(open(root2()), Zg) == att(q(2)));
    CHECK(normalize(open(q(0)), Zg) == maximal_cut(Zg));
    CHECK(normalize(att(root2()), Qg) == open(root2()));
    CHECK(is_normal(open(q(1)), Qg));
}

TEST_CASE("rank-2 normalization and degeneration") {
    CHECK(normalize(make_cut(false, q(1), q(0)), ZZ) == make_cut(true, q(1), q(1)));
    // level-1 coordinate outside its group determines the cut at level 1
    CHECK(normalize(make_cut(true, q(1, 2), q(5)), ZZ) == make_minus_inf_cut(true, q(1)));
    CHECK(normalize(make_cut(true, root2(), q(0)), QQ) == make_minus_inf_cut(false, root2()));
    CHECK(normalize(make_minus_inf_cut(false, q(0)), ZZ) == make_minus_inf_cut(true, q(1)));
    CHECK(normalize(make_cut(true, q(0), root2()), QQ) == make_cut(false, q(0), root2()));
}

TEST_CASE("unit, maximal and prime cuts") {
    CHECK(maximal_cut(Zg) == att(q(1)));
    CHECK(maximal_cut(Qg) == open(q(0)));
    CHECK(maximal_cut(ZZ) == make_cut(true, q(0), q(1)));
    CHECK(maximal_cut(ZQ) == make_cut(false, q(0), q(0)));
    CHECK(height_one_prime_cut(ZZ) == make_minus_inf_cut(true, q(1)));
    CHECK(height_one_prime_cut(QQ) == make_minus_inf_cut(false, q(0)));
    CHECK(is_integral(height_one_prime_cut(QQ), QQ));
    CHECK(!is_integral(make_minus_inf_cut(true, q(0)), ZZ));
}

TEST_CASE("containment order matches reverse ideal inclusion") {
    CHECK(cut_contains(att(q(1)), att(q(2))));
    CHECK(cut_contains(att(q(1)), open(q(1))));
    CHECK(!cut_contains(open(q(1)), att(q(1))));
    CHECK(cut_contains(open(root2()), att(q(3, 2))));
    CHECK(cut_contains(make_minus_inf_cut(true, q(1)), make_cut(true, q(1), q(-5))));
    CHECK(!cut_contains(make_cut(true, q(1), q(-5)), make_minus_inf_cut(true, q(1))));
}

TEST_CASE("local combine: products") {
    CHECK(combine_local(CombineKind::Product, att(q(1)), open(q(0)), Qg) == open(q(1)));
    CHECK(combine_local(CombineKind::Product, open(q(0)), open(q(0)), Qg) == open(q(0)));
    CHECK(combine_local(CombineKind::Product, att(q(3)), att(q(2)), Zg) == att(q(5)));
    CHECK(combine_local(CombineKind::Product, open(root2()), open(root2(-1)), Qg) == open(q(0)));
    // products against a level-1 half line absorb the second level
    Cut p = height_one_prime_cut(ZZ);
    CHECK(combine_local(CombineKind::Product, p, p, ZZ) == make_minus_inf_cut(true, q(2)));
    CHECK(combine_local(CombineKind::Product, p, make_cut(true, q(1), q(-7)), ZZ) ==
          make_minus_inf_cut(true, q(2)));
    Cut pq = height_one_prime_cut(QQ);
    CHECK(combine_local(CombineKind::Product, pq, make_cut(false, q(0), q(0)), QQ) == pq);
}

TEST_CASE("local combine: sum and intersection are lattice operations") {
    CHECK(combine_local(CombineKind::Sum, att(q(3)), att(q(2)), Zg) == att(q(2)));
    CHECK(combine_local(CombineKind::Intersect, att(q(3)), att(q(2)), Zg) == att(q(3)));
    CHECK(combine_local(CombineKind::Sum, open(q(1)), att(q(1)), Qg) == att(q(1)));
    CHECK(combine_local(CombineKind::Intersect, open(q(1)), att(q(1)), Qg) == open(q(1)));
}

TEST_CASE("rank-1 inverses") {
    CHECK(dual_cut(att(q(3, 2)), Qg) == att(q(-3, 2)));
    CHECK(dual_cut(open(root2()), Qg) == open(root2(-1)));
    CHECK(dual_cut(open(q(5)), Qg) == att(q(-5)));
    CHECK(dual_cut(att(q(4)), Zg) == att(q(-4)));
}

TEST_CASE("rank-1 inverse agrees with the sampled brute-force dual") {
    GridDual oracle;
    std::vector<Cut> cuts = {att(q(0)),      att(q(2)),  att(q(-3, 2)), open(q(0)),
                             open(q(5, 4)),  open(q(-2)), att(q(5, 2)),  open(q(1, 3)),
                             open(root2()),  open(root2(-1))};
    for (const auto& c : cuts) {
        Cut d = dual_cut(c, Qg);
        auto [grid_min, _] = oracle.dual_min(c);
        // The sampled dual sees only grid points of the cut, so its minimum
        // sits at most one grid step below the exact boundary.
        QuadExt diff = d.boundary[0] - QuadExt{grid_min};
        CHECK(diff.sign() >= 0);
        CHECK(diff <= QuadExt(Rat(1, 24)));
        if (c.attained) CHECK(QuadExt{grid_min} == d.boundary[0]);
    }
}

TEST_CASE("rank-2 duals round-trip through the closure") {
    std::vector<std::pair<Cut, ValueGroup>> cases = {
        {make_cut(true, q(2), q(-1)), ZZ},
        {make_cut(false, q(1), q(1, 2)), ZQ},
        {make_cut(false, q(1), root2()), ZQ},
        {make_minus_inf_cut(true, q(2)), ZZ},
        {make_minus_inf_cut(false, q(1, 2)), QQ},
        {make_minus_inf_cut(true, q(1, 2)), QQ},
        {height_one_prime_cut(ZZ), ZZ},
        {height_one_prime_cut(QQ), QQ},
    };
    for (const auto& [c, g] : cases) {
        Cut n = normalize(c, g);
        Cut dd = dual_cut(dual_cut(n, g), g);
        CHECK(dd == v_closure_local(n, g));
        Cut ddd = dual_cut(dd, g);
        CHECK(ddd == dual_cut(n, g));  // triple dual equals single dual
    }
}

TEST_CASE("closure fixed points and collapses") {
    CHECK(v_closure_local(open(q(3, 2)), Qg) == att(q(3, 2)));
    CHECK(v_closure_local(att(q(7)), Zg) == att(q(7)));
    CHECK(v_closure_local(open(root2()), Qg) == open(root2()));
    CHECK(v_closure_local(make_cut(false, q(1), q(2)), ZQ) == make_cut(true, q(1), q(2)));
    CHECK(v_closure_local(height_one_prime_cut(QQ), QQ) == height_one_prime_cut(QQ));
}

TEST_CASE("classification") {
    CHECK(classify_local(att(q(2)), Zg) == LocalClass::DivisorialPrincipal);
    CHECK(classify_local(open(q(0)), Qg) == LocalClass::Nondivisorial);
    CHECK(classify_local(open(root2()), Qg) == LocalClass::DivisorialNonprincipal);
    CHECK(classify_local(make_cut(false, q(0), q(0)), ZQ) == LocalClass::Nondivisorial);
    CHECK(classify_local(height_one_prime_cut(ZZ), ZZ) == LocalClass::DivisorialNonprincipal);
}

TEST_CASE("nondivisorial cuts are exactly principal multiples of the maximal cut") {
    std::vector<Cut> cuts = {att(q(1)), open(q(1)), open(root2()), open(q(-2)), att(q(0))};
    for (const auto& c : cuts) {
        bool nondiv = classify_local(c, Qg) == LocalClass::Nondivisorial;
        Cut xm = combine_local(CombineKind::Product, att(c.boundary[0]), maximal_cut(Qg), Qg);
        bool is_xm = c.boundary[0].is_rational() && c == xm;
        CHECK(nondiv == is_xm);
    }
}

TEST_CASE("radicals") {
    CHECK(radical_local(att(q(5)), Zg) == att(q(1)));
    CHECK(radical_local(open(root2()), Qg) == open(q(0)));
    CHECK(radical_local(make_minus_inf_cut(true, q(1)), ZZ) == make_minus_inf_cut(true, q(1)));
    CHECK(radical_local(make_minus_inf_cut(true, q(3)), ZZ) == height_one_prime_cut(ZZ));
    // a cut meeting level-1 coordinate zero is not inside the height-1 prime
    CHECK(radical_local(make_cut(true, q(0), q(4)), ZZ) == maximal_cut(ZZ));
    CHECK(radical_local(make_cut(true, q(2), q(-3)), ZZ) == height_one_prime_cut(ZZ));
    CHECK_THROWS_AS(radical_local(att(q(0)), Zg), Error);
    CHECK_THROWS_AS(radical_local(att(q(-1)), Zg), Error);
}

TEST_CASE("idempotents") {
    CHECK(is_idempotent(open(q(0)), Qg));
    CHECK(!is_idempotent(att(q(1)), Zg));
    CHECK(is_idempotent(att(q(0)), Qg));
    CHECK(is_idempotent(height_one_prime_cut(QQ), QQ));
    CHECK(!is_idempotent(height_one_prime_cut(ZZ), ZZ));
    CHECK(!is_idempotent(open(root2()), Qg));
}

TEST_CASE("product laws on a small catalog") {
    std::vector<Cut> catalog = {att(q(0)), att(q(1)), att(q(-1, 2)), open(q(0)),
                                open(q(2)), open(root2()), open(root2(-1))};
    for (const auto& a : catalog)
        for (const auto& b : catalog) {
            Cut ab = combine_local(CombineKind::Product, a, b, Qg);
            Cut ba = combine_local(CombineKind::Product, b, a, Qg);
            CHECK(ab == ba);
            CHECK(combine_local(CombineKind::Product, a, att(q(0)), Qg) == normalize(a, Qg));
            for (const auto& c : catalog) {
                Cut left = combine_local(CombineKind::Product, ab, c, Qg);
                Cut right =
                    combine_local(CombineKind::Product, a,
                                  combine_local(CombineKind::Product, b, c, Qg), Qg);
                CHECK(left == right);
            }
        }
}

TEST_CASE("quotient by cuts") {
    // (c : M) on a dense slot is the divisorial closure
    CHECK(cut_quotient(open(q(1)), maximal_cut(Qg), Qg) == att(q(1)));
    CHECK(cut_quotient(att(q(1)), maximal_cut(Qg), Qg) == att(q(1)));
    CHECK(cut_quotient(open(root2()), maximal_cut(Qg), Qg) == open(root2()));
    // principal quotients shift
    CHECK(cut_quotient(att(q(3)), att(q(1)), Zg) == att(q(2)));
    CHECK(cut_quotient(open(q(3)), att(q(1)), Qg) == open(q(2)));
    // quotient by x*M
    CHECK(cut_quotient(att(q(3)), open(q(1)), Qg) == att(q(2)));
    // quotient by an irrational open cut
    CHECK(cut_quotient(att(q(0)), open(root2()), Qg) == open(root2(-1)));
    // quotient by a level-1 half line only sees the trace
    CHECK(cut_quotient(make_cut(true, q(3), q(5)), height_one_prime_cut(ZZ), ZZ) ==
          make_minus_inf_cut(true, q(2)));
}

TEST_CASE("nonprincipal cuts absorb the maximal cut") {
    std::vector<std::pair<Cut, ValueGroup>> cases = {
        {open(root2()), Qg},
        {make_minus_inf_cut(true, q(2)), ZZ},
        {make_minus_inf_cut(false, q(1, 2)), QQ},
        {make_cut(false, q(1), root2()), ZQ},
    };
    for (const auto& [c, g] : cases) {
        Cut n = normalize(c, g);
        REQUIRE(classify_local(n, g) != LocalClass::DivisorialPrincipal);
        CHECK(combine_local(CombineKind::Product, n, maximal_cut(g), g) == n);
    }
    // principal cuts do not
    CHECK(combine_local(CombineKind::Product, att(q(1)), maximal_cut(Qg), Qg) != att(q(1)));
}
