#include <doctest.h>

#include <random>

#include "rebit/group.hpp"

using namespace rebit;

namespace {

Tensor random_tensor(std::mt19937_64& rng) {
    Tensor t;
    for (auto& c : t.t) c = CycNum(static_cast<long>(rng() % 7) - 3);
    return t;
}

}  // namespace

TEST_CASE("named matrices") {
    using namespace mats;
    CHECK(J() * J() == -I());
    CHECK(K() * K() == -I());
    CHECK(L() * L() == -I());
    CHECK(M().det().is_one());
    CHECK(by_name("-D(eta^3)") == -D(CycNum::eta(3)));
    CHECK(by_name("MJ") == M() * J());
    CHECK_THROWS_AS(by_name("Q"), ParseError);
}

TEST_CASE("group action is a homomorphism") {
    std::mt19937_64 rng(21);
    for (int r = 0; r < 10; ++r) {
        GElt g = random_real_element(rng), h = random_real_element(rng);
        CHECK(g.in_sl2());
        Tensor t = random_tensor(rng);
        CHECK(act(g * h, t) == act(g, act(h, t)));
        CHECK(act(g.inv(), act(g, t)) == t);
    }
}

TEST_CASE("derivation action matches the bracket on g0") {
    std::mt19937_64 rng(22);
    Tensor t = random_tensor(rng);
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            G0Elt x = G0Elt::basis(a), y = G0Elt::basis(b);
            CHECK(act(bracket(x, y), t) == act(x, act(y, t)) - act(y, act(x, t)));
        }
}

TEST_CASE("slot permutation commutes with the action") {
    std::mt19937_64 rng(23);
    std::array<int, 4> perm{0, 2, 1, 3};
    GElt g = random_real_element(rng);
    Tensor t = random_tensor(rng);
    CHECK(permute(perm, act(g, t)) == act(permute(perm, g), permute(perm, t)));
}

TEST_CASE("coboundary") {
    GElt g = GElt::parse_names("(L,I,K,D(eta))");
    CHECK(coboundary(g) == g.inv() * g.conj());
    CHECK(coboundary(g) * coboundary(g).conj() == GElt::identity());
    CHECK_THROWS_AS(GElt::parse_names("(L,I,K)"), ParseError);
}
