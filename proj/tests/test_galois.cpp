#include <doctest.h>

#include "rebit/galois.hpp"
#include "rebit/ssorbits.hpp"

using namespace rebit;

TEST_CASE("H1 of a small group with trivial and nontrivial involution") {
    // cyclic group of order 4 generated by (L, I, I, I); conj(L) = L^-1
    GElt l = GElt::parse_names("(L,I,I,I)");
    auto elems = generate_group({l});
    REQUIRE(elems.size() == 4);
    GGroup twisted(elems, [](const GElt& g) { return g.conj(); });
    // cocycles c conj(c) = 1: all four; classes c ~ a c conj(a)^-1 = a^2 c
    auto h = twisted.h1();
    CHECK(h.cocycles == 4);
    CHECK(h.reps.size() == 2);
    GGroup plain(elems, [](const GElt& g) { return g; });
    // c^2 = 1 for {1, -1}; classes under a c a^-1 = c
    CHECK(plain.h1().reps.size() == 2);
}

TEST_CASE("normalizer and Gamma cohomology counts") {
    CHECK(normalizer_group().h1().reps.size() == 7);
    const int cases[6] = {1, 2, 3, 4, 7, 10};
    const std::size_t want[6] = {7, 8, 2, 4, 2, 2};
    for (int k = 0; k < 6; ++k) CHECK(gamma_group(cases[k]).h1().reps.size() == want[k]);
}

TEST_CASE("epsilon rows and cocycle lifts") {
    REQUIRE(epsilon_table().size() == 9);
    for (const auto& e : epsilon_table()) {
        CHECK(e.a * e.a.conj() == Mat2::identity());
        CHECK(e.eps.inv() * e.eps.conj() == e.a);
    }
    REQUIRE(weyl_cocycle_lifts().size() == 16);
    for (const auto& l : weyl_cocycle_lifts()) {
        CHECK((l.n * l.n.conj()).is_identity());
        CHECK(cocycle_to_weyl(l.n) == l.w);
    }
    CHECK_THROWS_AS(cocycle_to_weyl(GElt::parse_names("(F,I,I,I)")), MathError);
}

TEST_CASE("class lists of semisimple centralizers") {
    const int cases[6] = {1, 2, 3, 4, 7, 10};
    const int want[6] = {12, 8, 4, 6, 2, 5};
    for (int k = 0; k < 6; ++k) {
        int i = cases[k];
        const auto& b = ss_block(i, 1);
        auto zs = block_z(ss_case(i), b);
        auto rep = verify_class_list(semisimple_centralizer(i).framed(block_g(ss_case(i), b)), zs, want[k]);
        CHECK_MESSAGE(rep.ok, "case ", i);
    }
}

TEST_CASE("a repeated class is rejected") {
    auto spec = semisimple_centralizer(10);
    auto zs = block_z(ss_case(10), ss_block(10, 1));
    zs.push_back(zs.back());
    CHECK(!verify_class_list(spec, zs, static_cast<int>(zs.size())).ok);
}
