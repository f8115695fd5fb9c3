#include <doctest.h>

#include "prufer/quad_ext.hpp"

using namespace prufer;

namespace {
QuadExt q(long num, long den = 1) { return QuadExt(Rat(num, den)); }
QuadExt root2(long num = 1, long den = 1) { return QuadExt(Rat(0), Rat(num, den), 2); }
}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/2") == Rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(!parse_rat("x").has_value());
    CHECK(!parse_rat("1/0").has_value());
    CHECK(!parse_rat("").has_value());
}

TEST_CASE("exact ordering around sqrt(2)") {
    QuadExt r = root2();
    CHECK(q(1) < r);
    CHECK(r < q(3, 2));
    CHECK(q(7, 5) < r);        // 1.4 < sqrt 2
    CHECK(r < q(17, 12));      // sqrt 2 < 1.41666...
    CHECK(q(-3, 2) < -r);      // -1.5 < -sqrt 2
    CHECK(-r < q(-7, 5));
    CHECK(r + (-r) == q(0));
    CHECK((r + q(1)) > r);
}

TEST_CASE("mixed-sign comparisons stay exact") {
    // 10 - 7*sqrt(2) is slightly above 0: 7*sqrt(2) = 9.899...
    QuadExt x(Rat(10), Rat(-7), 2);
    CHECK(x.sign() == 1);
    QuadExt y(Rat(9), Rat(-7), 2);
    CHECK(y.sign() == -1);
    QuadExt z(Rat(-10), Rat(7), 2);
    CHECK(z.sign() == -1);
}

TEST_CASE("floor and ceil of quadratic values") {
    QuadExt r = root2();
    CHECK(r.floor() == 1);
    CHECK(r.ceil() == 2);
    CHECK((-r).floor() == -2);
    CHECK((-r).ceil() == -1);
    CHECK((r + q(3)).floor() == 4);
    CHECK(q(5).floor() == 5);
    CHECK(q(5).ceil() == 5);
    CHECK(q(-7, 2).floor() == -4);
    CHECK(q(-7, 2).ceil() == -3);
    QuadExt big(Rat(0), Rat(12), 2);  // 12*sqrt(2) = 16.97...
    CHECK(big.floor() == 16);
    CHECK(big.ceil() == 17);
}

TEST_CASE("radicand bookkeeping") {
    CHECK(root2(0).is_rational());
    CHECK_THROWS_AS(root2() + QuadExt(Rat(0), Rat(1), 3), Error);
    CHECK((root2() + q(1)).radicand() == 2);
}
