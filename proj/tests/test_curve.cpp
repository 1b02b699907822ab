#include <doctest.h>

#include "ellh/curve.hpp"
#include "helpers.hpp"

using namespace ellh;
using namespace ellh::testing;

TEST_CASE("b-invariants and discriminant") {
    WeierstrassCurve e = curve_m2();
    CHECK(e.b2 == 0);
    CHECK(e.b4 == 0);
    CHECK(e.b6 == -8);
    CHECK(e.b8 == 0);
    CHECK(e.disc == -1728);

    WeierstrassCurve f = curve_37();
    CHECK(f.b2 == 0);
    CHECK(f.b4 == -2);
    CHECK(f.b6 == 1);
    CHECK(f.b8 == -1);
    CHECK(f.disc == 37);
    CHECK(4 * f.b8 == f.b2 * f.b6 - f.b4 * f.b4);

    CHECK_THROWS_AS(WeierstrassCurve::create(Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)),
                    SingularCurveError);
}

TEST_CASE("membership") {
    WeierstrassCurve e = curve_m2();
    CHECK(contains(e, pt(3, 5)));
    CHECK_FALSE(contains(e, pt(3, 6)));
    CHECK(contains(e, CurvePoint::infinity()));
}

TEST_CASE("group law on the sample curves") {
    WeierstrassCurve e = curve_m2();
    CurvePoint d = double_point(e, pt(3, 5));
    CHECK(d == pt(Rat(129, 100), Rat(-383, 1000)));
    CHECK(contains(e, d));

    WeierstrassCurve f = curve_37();
    CHECK(double_point(f, pt(0, 0)) == pt(1, 0));

    WeierstrassCurve g = curve_p1();
    CHECK(add(g, pt(2, 3), pt(0, 1)) == pt(-1, 0));

    CHECK(add(e, pt(3, 5), CurvePoint::infinity()) == pt(3, 5));
    CHECK(add(e, pt(3, 5), negate(e, pt(3, 5))).is_infinity());
    CHECK(double_point(g, pt(-1, 0)).is_infinity()); // 2-torsion
}

TEST_CASE("x duplication agrees with the worked values") {
    CHECK(x_duplication(curve_m2(), Rat(3)) == Rat(129, 100));
    CHECK(x_duplication(curve_37(), Rat(0)) == Rat(1));
    CHECK_THROWS_AS(x_duplication(curve_p1(), Rat(-1)), TwoTorsionError);
}

TEST_CASE("Y and F") {
    WeierstrassCurve e = curve_m2();
    CHECK(y_prime(e, pt(3, 5)) == 10);
    CHECK(cubic_F_eval(e, Rat(3)) == 100);
    CHECK(cubic_F_eval(e, Rat(0)) == e.b6);
    CHECK(y_prime(curve_37(), pt(0, 0)) == 1);
    CHECK(y_prime(curve_p1(), pt(-1, 0)) == 0);
    CHECK(cubic_F_eval(curve_p1(), Rat(-2)) == -28);
    CHECK_THROWS_AS(y_prime(e, CurvePoint::infinity()), PointAtInfinityError);
}

TEST_CASE("shift model worked examples") {
    ShiftedModel m = shift_model(curve_p1(), Rat(2));
    CHECK(m.curve.a1 == 0);
    CHECK(m.curve.a2 == -6);
    CHECK(m.curve.a3 == 0);
    CHECK(m.curve.a4 == 12);
    CHECK(m.curve.a6 == -7);
    CHECK(m.map_point(pt(2, 3)) == pt(4, 3));
    CHECK(contains(m.curve, m.map_point(pt(2, 3))));

    ShiftedModel id = shift_model(curve_m2(), Rat(0));
    CHECK(id.curve.a6 == -2);
    CHECK(id.map_point(pt(3, 5)) == pt(3, 5));

    ShiftedModel m1 = shift_model(curve_m2(), Rat(1));
    CHECK(m1.curve.a2 == -3);
    CHECK(m1.curve.a4 == 3);
    CHECK(m1.curve.a6 == -3);
    CHECK(m1.curve.disc == -1728);
}

TEST_CASE("properties on random curves") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        auto [e, p] = random_curve_with_point(rng);
        std::string desc = rat_to_string(e.a1) + "," + rat_to_string(e.a2) + "," +
                           rat_to_string(e.a3) + "," + rat_to_string(e.a4) + "," +
                           rat_to_string(e.a6);
        CAPTURE(desc);
        REQUIRE(contains(e, p));

        // b-identity holds exactly
        CHECK(4 * e.b8 == e.b2 * e.b6 - e.b4 * e.b4);

        // Y(P)^2 = F(x(P))
        Rat Y = y_prime(e, p);
        CHECK(Y * Y == cubic_F_eval(e, p.x()));

        // doubling agrees with the duplication quotient
        CurvePoint dp = double_point(e, p);
        if (!dp.is_infinity()) {
            CHECK(dp.x() == x_duplication(e, p.x()));
            CHECK(contains(e, dp));
        } else {
            CHECK(Y == 0);
        }

        // group identities
        CHECK(add(e, p, CurvePoint::infinity()) == p);
        CHECK(add(e, p, negate(e, p)).is_infinity());
        CurvePoint q = dp.is_infinity() ? p : dp;
        CHECK(add(e, p, q) == add(e, q, p));
        // associativity spot check: (P+P)+Q == P+(P+Q)
        CHECK(add(e, add(e, p, p), q) == add(e, p, add(e, p, q)));

        // negate formula
        CurvePoint np = negate(e, p);
        CHECK(np.y() == -p.y() - e.a1 * p.x() - e.a3);
        CHECK(contains(e, np));
    }
}

TEST_CASE("shift coherence on random curves") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> rd(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        auto [e, p] = random_curve_with_point(rng);
        Rat r(rd(rng));
        ShiftedModel m = shift_model(e, r);
        CurvePoint q = m.map_point(p);
        CHECK(contains(m.curve, q));
        CHECK(m.curve.disc == e.disc);
        CHECK(y_prime(m.curve, q) == y_prime(e, p));
        // F'(x + r) = F(x)
        CHECK(cubic_F_eval(m.curve, p.x() + r) == cubic_F_eval(e, p.x()));
        CHECK(m.map_point(CurvePoint::infinity()).is_infinity());
    }
}
