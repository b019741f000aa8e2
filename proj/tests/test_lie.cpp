#include <doctest.h>

#include <random>

#include "rebit/lie.hpp"

using namespace rebit;

namespace {

LieElt random_elt(std::mt19937_64& rng) {
    LieElt x = lie_zero();
    for (auto& c : x) c = CycNum(static_cast<long>(rng() % 5) - 2);
    return x;
}

}  // namespace

TEST_CASE("D4 structure") {
    const auto& g = D4::get();
    CHECK(g.roots().size() == 24);
    CHECK(check_structure().empty());
    int deg1 = 0;
    for (int a = 0; a < kDim; ++a) deg1 += g.degree(a);
    CHECK(deg1 == 16);
}

TEST_CASE("bracket is antisymmetric and the representation is faithful") {
    std::mt19937_64 rng(3);
    for (int r = 0; r < 10; ++r) {
        LieElt x = random_elt(rng), y = random_elt(rng);
        CHECK(bracket(x, y) + bracket(y, x) == lie_zero());
        Matrix mx = to_matrix(x), my = to_matrix(y);
        CHECK(to_matrix(bracket(x, y)) == mx * my - my * mx);
        CHECK(from_matrix(mx) == x);
    }
}

TEST_CASE("graded identification round trip") {
    for (int a = 0; a < kDim; ++a) {
        LieElt x = lie_basis(a);
        CHECK(from_graded(to_graded(x)) == x);
    }
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            Graded gb = bracket(to_graded(from_tensor(Tensor::basis(i))), to_graded(from_tensor(Tensor::basis(j))));
            CHECK(gb.x1.is_zero());
            CHECK(gb.x0 == bracket(Tensor::basis(i), Tensor::basis(j)));
        }
}

TEST_CASE("Jordan decomposition of a mixed element") {
    // e0000 + e1111 is semisimple; adding a commuting nilpotent gives a mixed element
    Tensor p = Tensor::basis("0000") + Tensor::basis("1111");
    CHECK(is_semisimple(from_tensor(p)));
    Tensor e = Tensor::basis("0011");
    CHECK(is_nilpotent(from_tensor(e)));
    Tensor x = Tensor::basis("0000") + Tensor::basis("0011");
    auto [s, n] = jordan_decompose(from_tensor(x));
    CHECK(s + n == from_tensor(x));
    CHECK(lie_is_zero(bracket(s, n)));
    CHECK(is_semisimple(s));
    CHECK(is_nilpotent(n));
}

TEST_CASE("Jordan property on random sparse tensors") {
    std::mt19937_64 rng(5);
    for (int r = 0; r < 30; ++r) {
        Tensor t;
        for (int k = 0; k < 3; ++k) t.t[rng() % 16] = CycNum(static_cast<long>(rng() % 5) - 2) + CycNum::i();
        LieElt x = from_tensor(t);
        auto [s, n] = jordan_decompose(x);
        CHECK(s + n == x);
        CHECK(lie_is_zero(bracket(s, n)));
        CHECK(is_semisimple(s));
        CHECK(is_nilpotent(n));
    }
}
