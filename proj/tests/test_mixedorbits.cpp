#include <doctest.h>

#include "rebit/mixedorbits.hpp"

using namespace rebit;

TEST_CASE("tensor parser") {
    CHECK(parse_tensor("-e0110") == -Tensor::basis("0110"));
    CHECK(parse_tensor("1/2*(e1111-e0000)") == (Tensor::basis("1111") - Tensor::basis("0000")).scaled(CycNum(1, 2)));
    CHECK_THROWS_AS(parse_tensor("e012"), ParseError);
    CHECK_THROWS_AS(parse_tensor("e0000+"), ParseError);
}

TEST_CASE("homogeneous sl2-triples for every n_{i,r}") {
    for (int i = 2; i <= 10; ++i) {
        Tensor p = h_elt(family_point(i, sample_parameters(i, 1)[0]));
        for (int r = 1; r <= nilpotent_count(i); ++r) {
            Tensor e = nilpotent_n(i, r);
            CHECK(bracket(p, e).is_zero());
            auto t = sl2_complete(p, e);
            CHECK_MESSAGE(check_triple(p, t).empty(), "n_", i, ",", r);
        }
    }
}

TEST_CASE("mu is a conjugate-linear involution on U_p") {
    for (int i : {2, 4, 7}) {
        const auto& c = ss_case(i);
        for (const auto& b : c.blocks) {
            GElt n = block_n(c, b);
            Tensor p = h_elt(family_point(i, sample_parameters(i, b.j)[0]));
            auto ms = u_p_mu_fixed(p, n);
            CHECK(ms.real_dim == ms.complex_dim);
            for (const auto& x : ms.fixed_basis) {
                CHECK(mu_apply(n, x) == x);
                Tensor ix = x.scaled(CycNum::i());
                CHECK(mu_apply(n, ix) == -ix);
            }
        }
    }
}

TEST_CASE("no real nilpotent part for n_{4,1} in case (4,4)") {
    const auto& c = ss_case(4);
    const auto& b = ss_block(4, 4);
    HVec q = family_point(4, sample_parameters(4, 4)[0]);
    auto r = find_real_nilpotent(4, q, block_n(c, b), nilpotent_n(4, 1));
    CHECK(r.status == RealNilpotent::Status::NoRealPoint);
    auto r2 = find_real_nilpotent(4, q, block_n(c, b), nilpotent_n(4, 2));
    CHECK(r2.status == RealNilpotent::Status::Found);
}

TEST_CASE("mixed classification") {
    const auto& u = CartanData::get().u;
    Tensor x = u[0] + u[1] + u[2] + Tensor::basis("0011");
    auto l = classify_mixed(x);
    CHECK(l.i == 2);
    CHECK(l.j == 1);
    CHECK(l.r == 1);
    CHECK(l.k == 1);
    CHECK_THROWS_AS(classify_mixed(Tensor::basis("0011")), ClassifyError);
    CHECK_THROWS_AS(classify_mixed(u[0] + u[1] + u[2]), ClassifyError);
}

TEST_CASE("rows of a mixed block round trip") {
    for (const auto& m : quadruple_reps(3, 1, 1)) {
        CHECK(bracket(m.s, m.n).is_zero());
        auto l = classify_mixed(m.s + m.n);
        CHECK(l.i == 3);
        CHECK(l.r == 1);
        CHECK(l.k == m.k);
    }
}

TEST_CASE("special stabilizers") {
    auto s44 = quadruple_stabilizer(4, 4, 1);
    CHECK(s44.spec.dim == 0);
    auto s72 = quadruple_stabilizer(7, 2, 5);
    CHECK(s72.spec.dim == 1);
    for (auto [i, j, r] : {std::array<int, 3>{4, 4, 1}, {7, 2, 5}, {3, 1, 1}}) {
        auto chk = verify_centralizer(i, j, r);
        CHECK_MESSAGE(chk.ok, i, ",", j, ",", r);
    }
}
