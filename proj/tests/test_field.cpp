#include <doctest.h>

#include <random>

#include "rebit/field.hpp"

using namespace rebit;

namespace {

CycNum random_cyc(std::mt19937_64& rng) {
    CycNum x;
    for (int k = 0; k < CycNum::D; ++k) x[k] = mpq_class(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
    for (int k = 0; k < CycNum::D; ++k) x[k].canonicalize();
    return x;
}

}  // namespace

TEST_CASE("eta is a primitive 16th root of unity") {
    CHECK(CycNum::eta(8) == CycNum(-1));
    CHECK(CycNum::eta(1).pow(16).is_one());
    CHECK(!CycNum::eta(1).pow(8).is_one());
    CHECK(CycNum::i() * CycNum::i() == CycNum(-1));
    CHECK(CycNum::sqrt2() * CycNum::sqrt2() == CycNum(2));
    CHECK(CycNum::zeta() * CycNum::zeta() == CycNum::i());
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(11);
    for (int r = 0; r < 40; ++r) {
        CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("galois automorphisms are multiplicative; conjugation is an involution") {
    std::mt19937_64 rng(12);
    for (int r = 0; r < 20; ++r) {
        CycNum a = random_cyc(rng), b = random_cyc(rng);
        for (int k : {3, 5, 7, 9, 15}) CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        CHECK(a.conj().conj() == a);
        CHECK((a * a.conj()).is_real());
        CHECK(a.re() + a.im() * CycNum::i() == a);
    }
}

TEST_CASE("text form round trip") {
    std::mt19937_64 rng(13);
    for (int r = 0; r < 20; ++r) {
        CycNum a = random_cyc(rng);
        CHECK(CycNum::parse(a.str()) == a);
    }
    CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
    CHECK_THROWS_AS(CycNum::parse("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("sign of real values") {
    CHECK((CycNum::sqrt2() - CycNum(1)).sign() == 1);
    CHECK((CycNum(7, 5) - CycNum::sqrt2()).sign() == -1);
    CHECK(CycNum(0).sign() == 0);
    CHECK_THROWS_AS(CycNum::i().sign(), MathError);
}
