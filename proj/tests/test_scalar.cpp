#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tschirn/scalar.hpp"

using namespace tsch;

TEST_CASE("rationals normalize to lowest terms, positive denominator") {
    Scalar a = Scalar::rational(4, -6);
    CHECK(a.to_string() == "-2/3");
    CHECK(a.as_rat().get_den() == 3);
    Scalar b = Scalar::rational(10, 5);
    CHECK(b.to_string() == "2");
}

TEST_CASE("cross-ring arithmetic is rejected") {
    Scalar z = Scalar::integer(3);
    Scalar q = Scalar::rational(1, 2);
    CHECK_THROWS_AS(z + q, ring_error);
    CHECK_THROWS_AS(z * Scalar::from_int(Ring::GFq(7), 2), ring_error);
}

TEST_CASE("explicit conversions") {
    Scalar z = Scalar::integer(-5);
    CHECK(z.convert_to(Ring::QQ()).to_string() == "-5");
    CHECK(z.convert_to(Ring::GFq(7)).to_string() == "2");
    Scalar q = Scalar::rational(1, 2);
    // 1/2 = 4 in F_7
    CHECK(q.convert_to(Ring::GFq(7)).to_string() == "4");
    CHECK_THROWS_AS(q.convert_to(Ring::ZZ()), ring_error);
}

TEST_CASE("prime field residues stay reduced") {
    Ring f11 = Ring::GFq(11);
    Scalar a = Scalar::from_int(f11, -1);
    CHECK(a.to_string() == "10");
    Scalar b = Scalar::from_int(f11, 25); // 25 = 3 mod 11
    CHECK((a * b).to_string() == "8");
}

TEST_CASE("F_11 arithmetic agrees with integers mod 11") {
    Ring f11 = Ring::GFq(11);
    for (long x = 0; x < 11; ++x)
        for (long y = 1; y < 11; ++y) {
            Scalar sx = Scalar::from_int(f11, x), sy = Scalar::from_int(f11, y);
            CHECK((sx + sy) == Scalar::from_int(f11, x + y));
            CHECK((sx * sy) == Scalar::from_int(f11, x * y));
            CHECK((sx / sy) * sy == sx);
        }
}

TEST_CASE("F_{p^m} has the right multiplicative structure") {
    Ring f8 = Ring::GFq(2, 3);
    CHECK(f8.gf->order() == 8);
    // every nonzero element has order dividing 7, and some element has order 7
    auto a = f8.gf->element_of_order(7);
    CHECK(f8.gf->order_dividing(a, 7) == 7);
    // Frobenius sanity: x^8 = x for all elements
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        GFContext::Elem e{idx & 1, (idx >> 1) & 1, (idx >> 2) & 1};
        CHECK(f8.gf->pow(e, 8) == e);
    }
}

TEST_CASE("F_{3^2} modulus is deterministic and irreducible") {
    Ring f9a = Ring::GFq(3, 2);
    Ring f9b = Ring::GFq(3, 2);
    CHECK(f9a.gf->modulus() == f9b.gf->modulus());
    CHECK(f9a.gf->order() == 9);
    auto g = f9a.gf->element_of_order(8);
    CHECK(f9a.gf->order_dividing(g, 8) == 8);
}

TEST_CASE("ring axioms on random scalars, exact") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = Scalar::rational(d(rng), 1 + std::abs(d(rng)));
        Scalar b = Scalar::rational(d(rng), 1 + std::abs(d(rng)));
        Scalar c = Scalar::rational(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar::zero(Ring::QQ()) == a);
        CHECK(a * Scalar::one(Ring::QQ()) == a);
    }
}

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse(Ring::QQ(), "-3/6").to_string() == "-1/2");
    CHECK(Scalar::parse(Ring::ZZ(), "42").to_string() == "42");
    CHECK(Scalar::parse(Ring::GFq(5), "7").to_string() == "2");
    CHECK_THROWS(Scalar::parse(Ring::QQ(), "x"));
}
