#include <doctest.h>

#include <cmath>

#include <random>

#include "ellh/rational.hpp"

using namespace ellh;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3") == Rat(3));
    CHECK(rat_from_string("-3/6") == Rat(-1, 2));
    CHECK(rat_from_string("129/100") == Rat(129, 100));
    CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_to_string(rat_from_string("4/2")) == "2");

    CHECK_THROWS_AS(rat_from_string(""), Error);
    CHECK_THROWS_AS(rat_from_string("1/"), Error);
    CHECK_THROWS_AS(rat_from_string("/2"), Error);
    CHECK_THROWS_AS(rat_from_string("a"), Error);
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("1.5"), Error);
}

TEST_CASE("round trip on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 200; ++i) {
        long den = d(rng);
        if (den == 0)
            den = 1;
        Rat q(d(rng), den);
        q.canonicalize();
        CHECK(rat_from_string(rat_to_string(q)) == q);
    }
}

TEST_CASE("valuations") {
    CHECK(valuation(Int(100), 5) == 2);
    CHECK(valuation(Rat(129, 100), 5) == -2);
    CHECK(valuation(Rat(129, 100), 2) == -2);
    CHECK(valuation(Rat(129, 100), 3) == 1);
    CHECK(valuation(Rat(-8), 2) == 3);
    CHECK_THROWS_AS(valuation(Rat(0), 3), Error);
}

TEST_CASE("log_abs handles values far past double range") {
    Int big = 1;
    big <<= 100000; // 2^100000
    CHECK(log_abs(big) == doctest::Approx(100000 * std::log(2.0)).epsilon(1e-12));
    CHECK(log_abs(Rat(big) / 3) ==
          doctest::Approx(100000 * std::log(2.0) - std::log(3.0)).epsilon(1e-12));
    CHECK(log_abs(Int(-10)) == doctest::Approx(std::log(10.0)));
}

TEST_CASE("naive height") {
    CHECK(naive_height(Rat(129, 100)) == 129);
    CHECK(naive_height(Rat(-3, 1000)) == 1000);
    CHECK(naive_height(Rat(0)) == 1);
}

TEST_CASE("floor and ceil") {
    CHECK(floor_to_int(Rat(7, 2)) == 3);
    CHECK(ceil_to_int(Rat(7, 2)) == 4);
    CHECK(floor_to_int(Rat(-7, 2)) == -4);
    CHECK(ceil_to_int(Rat(-7, 2)) == -3);
    CHECK(floor_to_int(Rat(4)) == 4);
    CHECK(ceil_to_int(Rat(4)) == 4);
}
