#include <doctest.h>

#include <random>

#include "rebit/cartan.hpp"
#include "rebit/invariants.hpp"

using namespace rebit;

TEST_CASE("quadratic invariant is unique up to scale") {
    CHECK(quadratic_solution_dim() == 1);
    const auto& q = derive_quadratic();
    CHECK(q[0][15] == CycNum(1));
}

TEST_CASE("invariants are invariant and homogeneous") {
    std::mt19937_64 rng(31);
    Tensor t;
    for (auto& c : t.t) c = CycNum(static_cast<long>(rng() % 7) - 3);
    auto iv = invariants_of(t);
    for (int r = 0; r < 20; ++r) CHECK(invariants_of(act(random_real_element(rng), t)) == iv);
    auto two = invariants_of(t.scaled(CycNum(2)));
    CHECK(two.H == CycNum(4) * iv.H);
    CHECK(two.L12 == CycNum(16) * iv.L12);
    CHECK(two.L14 == CycNum(16) * iv.L14);
}

TEST_CASE("hyperdeterminant of GHZ and W slices") {
    Array222 w{};
    w[0][0][1] = 1;
    w[0][1][0] = 1;
    w[1][0][0] = 1;
    CHECK(hyperdet222(w).is_zero());
    Array222 ghz{};
    ghz[0][0][0] = 1;
    ghz[1][1][1] = 1;
    CHECK(hyperdet222(ghz) == CycNum(1));
}

TEST_CASE("two-copy counting identity") {
    auto c = two_center_count();
    CHECK(c.copies_dim == 16);
    CHECK(c.orbit_dim == 9);
    CHECK(c.invariants == 7);
}

TEST_CASE("invariants separate distinct Cartan points") {
    HVec p{CycNum(1), CycNum(2), CycNum(3), CycNum(5)}, q{CycNum(1), CycNum(2), CycNum(3), CycNum(7)};
    CHECK(separates(h_elt(p), h_elt(q)));
    CHECK(!separates(h_elt(p), h_elt(p)));
}
