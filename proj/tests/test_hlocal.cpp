#include <doctest.h>

#include "prufer/hlocal.hpp"

using namespace prufer;

namespace {

QuadExt q(long num, long den = 1) { return QuadExt(Rat(num, den)); }
QuadExt root2(long num = 1, long den = 1) { return QuadExt(Rat(0), Rat(num, den), 2); }
Cut att(QuadExt b) { return make_cut(true, std::move(b)); }
Cut openc(QuadExt b) { return make_cut(false, std::move(b)); }

DomainPresentation two_slot_qz() {
    DomainPresentation d;
    d.slots.emplace("M1", ValueGroup(LevelTag::Q));
    d.slots.emplace("M2", ValueGroup(LevelTag::Z));
    d.validate();
    return d;
}

DomainPresentation single_q() {
    DomainPresentation d;
    d.slots.emplace("M", ValueGroup(LevelTag::Q));
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

TEST_CASE("classify_max distinguishes the three containment classes") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(2))}, {"M2", att(q(1))}});
    CHECK(classify_max(d, i, "M1") == MaxClass::InM);
    CHECK(classify_max(d, i, "M2") == MaxClass::InN);
    GlobalIdeal j = make_ideal(d, {{"M1", att(q(1))}});
    CHECK(classify_max(d, j, "M1") == MaxClass::InMprime);
    CHECK(classify_max(d, j, "M2") == MaxClass::NotContaining);
    CHECK_THROWS_AS(classify_max(d, i, "XX"), Error);
}

TEST_CASE("v_closure works slotwise and fixes divisorial ideals") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(1))}, {"M2", att(q(2))}});
    GlobalIdeal c = v_closure(d, i);
    CHECK(effective_cut(d, c, "M1") == att(q(1)));
    CHECK(effective_cut(d, c, "M2") == att(q(2)));
    CHECK(v_closure(d, c) == c);
    GlobalIdeal s = make_ideal(d, {{"M1", openc(root2())}});
    CHECK(v_closure(d, s) == s);
    CHECK_THROWS_AS(v_closure(shared_zz(), GlobalIdeal{}), Error);
}

TEST_CASE("strong factorization: certificate, factors, irredundancy") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(1))}, {"M2", att(q(2))}});
    Factorization f = strong_factorize(d, i);
    CHECK(f.factors == std::vector<MaxId>{"M1"});
    CHECK(f.certificate.ok());
    CHECK(f.divisorial_part == v_closure(d, i));

    GlobalIdeal divisorial = make_ideal(d, {{"M1", att(q(1))}, {"M2", att(q(3))}});
    Factorization g = strong_factorize(d, divisorial);
    CHECK(g.factors.empty());
    CHECK(g.certificate.ok());
    CHECK(g.divisorial_part == divisorial);
}

TEST_CASE("strong factorization of a radical ideal over two dense slots") {
    DomainPresentation d;
    d.slots.emplace("M1", ValueGroup(LevelTag::Q));
    d.slots.emplace("M2", ValueGroup(LevelTag::Q));
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(0))}, {"M2", openc(q(0))}});
    Factorization f = strong_factorize(d, i);
    CHECK(f.factors == std::vector<MaxId>{"M1", "M2"});
    CHECK(ideal_is_unit(f.divisorial_part));
    CHECK(f.certificate.ok());
}

TEST_CASE("the square-root-of-two slot reproduces the dense-group example") {
    DomainPresentation d = single_q();
    GlobalIdeal i = make_ideal(d, {{"M", openc(root2())}});
    CHECK(v_closure(d, i) == i);
    GlobalIdeal inv = vdual(d, i);
    CHECK(effective_cut(d, inv, "M") == openc(root2(-1)));
    GlobalIdeal t = combine_global(CombineKind::Product, d, i, inv);
    CHECK(effective_cut(d, t, "M") == openc(q(0)));
    CHECK(effective_cut(d, t, "M") == maximal_cut(ValueGroup(LevelTag::Q)));
    CHECK(classify_local(effective_cut(d, t, "M"), ValueGroup(LevelTag::Q)) ==
          LocalClass::Nondivisorial);

    TraceReport rep = trace_and_invertibility(d, i);
    CHECK(!rep.invertible);
    CHECK(rep.trace == t);
    CHECK(!rep.iv_invertible);  // the closure equals i and is not invertible
}

TEST_CASE("vdual examples and double dual") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal princ = make_ideal(d, {{"M1", att(q(3, 2))}, {"M2", att(q(-1))}});
    GlobalIdeal inv = vdual(d, princ);
    CHECK(effective_cut(d, inv, "M1") == att(q(-3, 2)));
    CHECK(effective_cut(d, inv, "M2") == att(q(1)));
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(1))}});
    CHECK(effective_cut(d, vdual(d, i), "M1") == att(q(-1)));
    CHECK(vdual(d, vdual(d, i)) == v_closure(d, i));
}

TEST_CASE("trace and invertibility reports") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal inv = make_ideal(d, {{"M1", att(q(2))}, {"M2", att(q(5))}});
    TraceReport r1 = trace_and_invertibility(d, inv);
    CHECK(r1.invertible);
    CHECK(r1.iv_invertible);

    GlobalIdeal xm = make_ideal(d, {{"M1", openc(q(1))}});
    TraceReport r2 = trace_and_invertibility(d, xm);
    CHECK(!r2.invertible);
    CHECK(effective_cut(d, r2.trace, "M1") == openc(q(0)));
    CHECK(r2.iv_invertible);

    GlobalIdeal nd = make_ideal(d, {{"M1", openc(q(3))}});
    CHECK(trace_and_invertibility(d, nd).iv_invertible);
}

TEST_CASE("combine_global basics") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(1))}});
    CHECK(combine_global(CombineKind::Product, d, unit_ideal(), i) == i);
    GlobalIdeal j = make_ideal(d, {{"M2", att(q(1))}});
    CHECK(ideal_is_unit(combine_global(CombineKind::Sum, d, i, j)));
    GlobalIdeal isect = combine_global(CombineKind::Intersect, d, i, j);
    CHECK(effective_cut(d, isect, "M1") == openc(q(1)));
    CHECK(effective_cut(d, isect, "M2") == att(q(1)));
}

TEST_CASE("predicted factorizations match direct computation on the examples") {
    DomainPresentation d = single_q();
    // trace of I = x*M: predicted II^{-1} = (II^{-1})^v * {M}
    GlobalIdeal xm = make_ideal(d, {{"M", openc(q(1))}});
    Factorization tf = predict_factorization(PredictKind::Trace, d, xm);
    CHECK(tf.factors == std::vector<MaxId>{"M"});
    CHECK(tf.certificate.ok());

    // sum of two divisorial ideals factors with no maximal part
    DomainPresentation d2 = two_slot_qz();
    GlobalIdeal a = make_ideal(d2, {{"M1", att(q(1))}, {"M2", att(q(2))}});
    GlobalIdeal b = make_ideal(d2, {{"M1", att(q(2))}, {"M2", att(q(1))}});
    Factorization sumf = predict_factorization(PredictKind::Sum, d2, a, b);
    CHECK(sumf.factors.empty());
    CHECK(sumf.certificate.ok());

    // product of the dense-slot ideal with its inverse picks up {M}
    GlobalIdeal s2 = make_ideal(d, {{"M", openc(root2())}});
    GlobalIdeal s2inv = vdual(d, s2);
    Factorization pf = predict_factorization(PredictKind::Product, d, s2, s2inv);
    CHECK(pf.factors == std::vector<MaxId>{"M"});
    CHECK(ideal_is_unit(pf.divisorial_part));
    CHECK(pf.certificate.ok());
}

TEST_CASE("predicted factorizations equal strong factorization on mixed inputs") {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    d.slots.emplace("B", ValueGroup(LevelTag::Q));
    d.slots.emplace("C", ValueGroup(LevelTag::Z));
    GlobalIdeal i = make_ideal(d, {{"A", openc(q(1))}, {"B", openc(root2())}, {"C", att(q(2))}});
    GlobalIdeal j = make_ideal(d, {{"A", openc(q(2))}, {"B", att(q(1))}, {"C", att(q(1))}});
    for (PredictKind kind : {PredictKind::Product, PredictKind::Intersection, PredictKind::Sum}) {
        Factorization pf = predict_factorization(kind, d, i, j);
        CHECK(pf.certificate.ok());
        CombineKind ck = kind == PredictKind::Product
                             ? CombineKind::Product
                             : (kind == PredictKind::Sum ? CombineKind::Sum
                                                         : CombineKind::Intersect);
        Factorization sf = strong_factorize(d, combine_global(ck, d, i, j));
        CHECK(pf.factors == sf.factors);
        CHECK(pf.divisorial_part == sf.divisorial_part);
    }
    Factorization rf = predict_factorization(PredictKind::Radical, d, i);
    Factorization rs = strong_factorize(d, radical_global(d, i));
    CHECK(rf.factors == rs.factors);
    CHECK(rf.certificate.ok());
    Factorization tf = predict_factorization(PredictKind::Trace, d, i);
    Factorization ts =
        strong_factorize(d, combine_global(CombineKind::Product, d, i, vdual(d, i)));
    CHECK(tf.factors == ts.factors);
    CHECK(tf.certificate.ok());
}

TEST_CASE("fractional ideals factor through a principal denominator") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal f = make_ideal(d, {{"M1", openc(q(-3, 2))}, {"M2", att(q(-2))}});
    auto denom = denominator(d, f);
    CHECK(!denom.empty());
    CHECK(ideal_is_integral(d, integral_part(d, f)));
    Factorization fact = strong_factorize(d, f);
    CHECK(fact.factors == std::vector<MaxId>{"M1"});
    CHECK(fact.certificate.ok());
}

TEST_CASE("contraction of a localization") {
    // no sharing: supported only at the chosen slot
    DomainPresentation d = two_slot_qz();
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(1))}, {"M2", att(q(1))}});
    GlobalIdeal c = contract_localization(d, i, "M1");
    CHECK(c.locals.size() == 1);
    CHECK(effective_cut(d, c, "M1") == openc(q(1)));

    // shared prime: the other member sees the level-1 trace
    DomainPresentation s = shared_zz();
    GlobalIdeal j = make_ideal(
        s, {{"M", make_cut(true, q(1), q(0))}, {"N", make_cut(true, q(1), q(0))}});
    GlobalIdeal jc = contract_localization(s, j, "M");
    CHECK(effective_cut(s, jc, "M") == make_cut(true, q(1), q(0)));
    CHECK(effective_cut(s, jc, "N") == make_minus_inf_cut(true, q(1)));
    for (const auto& [m, cut] : jc.locals)
        CHECK(classify_local(cut, s.group(m)) != LocalClass::Nondivisorial);
}

TEST_CASE("divisorial decomposition splits the closure into three parts") {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    d.slots.emplace("B", ValueGroup(LevelTag::Q));
    d.slots.emplace("C", ValueGroup(LevelTag::Z));
    GlobalIdeal i = make_ideal(d, {{"A", openc(q(1))}, {"B", openc(root2())}, {"C", att(q(2))}});
    DivisorialDecomposition dec = decompose_divisorial(d, i);
    CHECK(effective_cut(d, dec.invertible_part, "A") == att(q(1)));
    CHECK(effective_cut(d, dec.mprime_part, "B") == openc(root2()));
    CHECK(effective_cut(d, dec.n_part, "C") == att(q(2)));
    GlobalIdeal prod = combine_global(
        CombineKind::Product, d,
        combine_global(CombineKind::Product, d, dec.invertible_part, dec.mprime_part),
        dec.n_part);
    CHECK(prod == v_closure(d, i));
    CHECK(trace_and_invertibility(d, dec.invertible_part).invertible);

    // i = x*M at one dense slot: invertible part (x), the others trivial
    DomainPresentation s = single_q();
    GlobalIdeal xm = make_ideal(s, {{"M", openc(q(1))}});
    DivisorialDecomposition d2 = decompose_divisorial(s, xm);
    CHECK(effective_cut(s, d2.invertible_part, "M") == att(q(1)));
    CHECK(ideal_is_unit(d2.mprime_part));
    CHECK(ideal_is_unit(d2.n_part));
    GlobalIdeal lm = combine_global(CombineKind::Product, s, d2.invertible_part,
                                    maximal_ideal_of(s, "M"));
    CHECK(lm == xm);

    // supported on one discrete slot: everything lands in the trailing part
    DomainPresentation z;
    z.slots.emplace("Z", ValueGroup(LevelTag::Z));
    GlobalIdeal zi = make_ideal(z, {{"Z", att(q(4))}});
    DivisorialDecomposition d3 = decompose_divisorial(z, zi);
    CHECK(d3.n_part == zi);
    CHECK(ideal_is_unit(d3.invertible_part));
    CHECK(ideal_is_unit(d3.mprime_part));
}

TEST_CASE("closure identities for sums, intersections and radicals") {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    d.slots.emplace("B", ValueGroup(LevelTag::Q));
    GlobalIdeal i = make_ideal(d, {{"A", openc(q(1))}, {"B", att(q(1))}});
    GlobalIdeal j = make_ideal(d, {{"A", att(q(2))}, {"B", openc(root2())}});
    GlobalIdeal lhs = v_closure(d, combine_global(CombineKind::Intersect, d, i, j));
    GlobalIdeal rhs = combine_global(CombineKind::Intersect, d, v_closure(d, i), v_closure(d, j));
    CHECK(lhs == rhs);
    GlobalIdeal lhs2 = v_closure(d, combine_global(CombineKind::Sum, d, i, j));
    GlobalIdeal rhs2 = combine_global(CombineKind::Sum, d, v_closure(d, i), v_closure(d, j));
    CHECK(lhs2 == rhs2);
    GlobalIdeal r1 = v_closure(d, radical_global(d, i));
    GlobalIdeal r2 = v_closure(d, radical_global(d, v_closure(d, i)));
    CHECK(r1 == r2);
}

TEST_CASE("degenerate predictions with both operands equal") {
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    d.slots.emplace("B", ValueGroup(LevelTag::Z));
    d.slots.emplace("C", ValueGroup(LevelTag::Q, LevelTag::Q));
    GlobalIdeal i = make_ideal(
        d, {{"A", openc(q(1))}, {"B", att(q(2))}, {"C", make_cut(false, q(1), q(1))}});
    for (PredictKind kind : {PredictKind::Product, PredictKind::Intersection, PredictKind::Sum}) {
        Factorization pf = predict_factorization(kind, d, i, i);
        CHECK(pf.certificate.ok());
        CombineKind ck = kind == PredictKind::Product
                             ? CombineKind::Product
                             : (kind == PredictKind::Sum ? CombineKind::Sum
                                                         : CombineKind::Intersect);
        Factorization sf = strong_factorize(d, combine_global(ck, d, i, i));
        CHECK(pf.factors == sf.factors);
        CHECK(pf.divisorial_part == sf.divisorial_part);
    }
    // intersection and sum of an ideal with itself change nothing
    CHECK(combine_global(CombineKind::Sum, d, i, i) == i);
    CHECK(combine_global(CombineKind::Intersect, d, i, i) == i);
}

TEST_CASE("primary ideals of a height-1 prime trace back to the prime") {
    // at a rank-2 slot, an ideal living over the height-1 prime has trace
    // exactly that prime, the model's weak trace property for primaries
    for (auto g2 : {LevelTag::Z, LevelTag::Q}) {
        DomainPresentation d;
        d.slots.emplace("M", ValueGroup(LevelTag::Z, g2));
        ValueGroup g(LevelTag::Z, g2);
        for (long k = 1; k <= 3; ++k) {
            GlobalIdeal qk = make_ideal(d, {{"M", make_minus_inf_cut(true, q(k))}});
            TraceReport t = trace_and_invertibility(d, qk);
            CHECK(effective_cut(d, t.trace, "M") == height_one_prime_cut(g));
            CHECK(!t.invertible);
        }
    }
}

TEST_CASE("operation error paths") {
    DomainPresentation d = two_slot_qz();
    GlobalIdeal i = make_ideal(d, {{"M1", openc(q(1))}});
    CHECK_THROWS_AS(predict_factorization(PredictKind::Product, d, i, std::nullopt), Error);
    GlobalIdeal frac = make_ideal(d, {{"M1", att(q(-2))}});
    CHECK_THROWS_AS(radical_global(d, frac), Error);
    CHECK_THROWS_AS(contract_localization(d, frac, "M1"), Error);
    DomainPresentation s = shared_zz();
    CHECK_THROWS_AS(vdual(s, GlobalIdeal{}), Error);
    CHECK_THROWS_AS(strong_factorize(s, GlobalIdeal{}), Error);
    // an inconsistent shared-prime ideal is rejected at construction
    CHECK_THROWS_AS(make_ideal(s, {{"M", make_cut(true, q(1), q(0))},
                                   {"N", make_cut(true, q(2), q(0))}}),
                    Error);
}

TEST_CASE("products of closures factor through the detected slots only") {
    // the slots appearing for a product of two divisorial ideals are
    // exactly those where the product of locally divisorial cuts turns
    // nondivisorial
    DomainPresentation d;
    d.slots.emplace("A", ValueGroup(LevelTag::Q));
    d.slots.emplace("B", ValueGroup(LevelTag::Z));
    GlobalIdeal i = make_ideal(d, {{"A", openc(root2())}, {"B", att(q(1))}});
    GlobalIdeal j = make_ideal(d, {{"A", make_cut(false, QuadExt(Rat(5), Rat(-1), 2))}});
    CHECK(v_closure(d, i) == i);
    CHECK(v_closure(d, j) == j);
    GlobalIdeal prod = combine_global(CombineKind::Product, d, i, j);
    CHECK(effective_cut(d, prod, "A") == openc(q(5)));  // irrational parts cancel
    Factorization f = strong_factorize(d, prod);
    CHECK(f.factors == std::vector<MaxId>{"A"});
    CHECK(effective_cut(d, f.divisorial_part, "A") == att(q(5)));
    CHECK(f.certificate.ok());

    // and the same factor set comes out of the prediction of i * j
    Factorization pf = predict_factorization(PredictKind::Product, d, i, j);
    CHECK(pf.factors == f.factors);
}
