#include "doctest.h"
#include "griesslab/cyc.hpp"

#include <cmath>
#include <random>

using namespace griesslab;

TEST_CASE("rat canonical form and parsing") {
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat::parse("13/1024") == Rat(13, 1024));
    CHECK(Rat::parse(" -10/4 ").str() == "-5/2");
    CHECK(Rat(8).str() == "8");
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS(Rat::parse("x"));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("continued fraction rationalization") {
    Rat r;
    REQUIRE(rationalize(25.0 / 28.0 + 1e-12, 10000, 1e-9, r));
    CHECK(r == Rat(25, 28));
    REQUIRE(rationalize(-39.0 / 28.0, 10000, 1e-9, r));
    CHECK(r == Rat(-39, 28));
    CHECK_FALSE(rationalize(std::sqrt(2.0) / 7, 10000, 1e-9, r));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_poly(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_poly(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(9).size() == 7);
    CHECK(euler_phi(18) == 6);
}

TEST_CASE("roots of unity") {
    CHECK(Cyc::root_of_unity(1, 0) == Cyc(1));
    CHECK(Cyc::root_of_unity(2, 1) == Cyc(-1));
    auto i = Cyc::root_of_unity(4, 1);
    CHECK(i * i == Cyc(-1));
    auto z3 = Cyc::root_of_unity(3, 1);
    CHECK(z3 + Cyc::root_of_unity(3, 2) == Cyc(-1));
    CHECK(Cyc::root_of_unity(5, 1) * Cyc::root_of_unity(5, 4) == Cyc(1));
    for (int n : {3, 5, 6, 8, 9, 12, 18}) {
        auto z = Cyc::root_of_unity(n, 1);
        Cyc p(1);
        for (int k = 0; k < n; ++k) p *= z;
        CHECK(p == Cyc(1));
    }
}

TEST_CASE("embedding") {
    auto z8 = Cyc::root_of_unity(8, 1);
    auto s = z8 + z8.conj();
    CHECK(std::abs(s.to_complex() - std::complex<double>(std::sqrt(2.0), 0)) < 1e-12);
    auto z5 = Cyc::root_of_unity(5, 2);
    CHECK(std::abs(z5.to_complex() - std::polar(1.0, 4 * M_PI / 5)) < 1e-12);
}

TEST_CASE("mixed conductors lift to the lcm") {
    auto a = Cyc::root_of_unity(3, 1) + Cyc::root_of_unity(4, 1);
    CHECK(a.conductor() == 12);
    CHECK(Cyc::root_of_unity(6, 2) == Cyc::root_of_unity(3, 1));
    CHECK(Cyc::root_of_unity(8, 2) == Cyc::root_of_unity(4, 1));
    auto back = Cyc::root_of_unity(6, 1).lift(18).descend(6);
    REQUIRE(back.has_value());
    CHECK(back->conductor() == 6);
    CHECK(*back == Cyc::root_of_unity(6, 1));
    CHECK_FALSE(Cyc::root_of_unity(9, 1).descend(3).has_value());
    CHECK(Cyc::root_of_unity(12, 4).minimal().conductor() == 3);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    auto rnd = [&](int n) {
        std::vector<Rat> c;
        for (long i = 0; i < euler_phi(n); ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
        return Cyc(n, c);
    };
    for (int n : {3, 4, 5, 8, 9, 12}) {
        for (int t = 0; t < 10; ++t) {
            Cyc a = rnd(n), b = rnd(n), c = rnd(n);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inv() == Cyc(1));
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(*a.lift(2 * n).descend(n) == a);
        }
    }
    CHECK(Cyc(Rat(3, 7)).conj() == Cyc(Rat(3, 7)));
    CHECK_THROWS_AS(Cyc(0).inv(), std::domain_error);
}

TEST_CASE("string form") {
    CHECK(Cyc(Rat(5, 2)).str() == "5/2");
    CHECK((Cyc::root_of_unity(4, 1) * Cyc(Rat(1, 32))).str() == "1/32*z4");
    CHECK(Cyc::root_of_unity(12, 4).str() == "z3");
}
