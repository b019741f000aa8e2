#include <doctest.h>

#include "rebit/linalg.hpp"

using namespace rebit;

TEST_CASE("kernel and rank") {
    Matrix m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    CHECK(m.rank() == 1);
    auto ker = m.kernel();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        auto w = m * v;
        for (const auto& x : w) CHECK(x.is_zero());
    }
}

TEST_CASE("inverse and determinant over Q(eta)") {
    Matrix m(2, 2);
    m(0, 0) = CycNum::eta(1); m(0, 1) = 1;
    m(1, 0) = CycNum::i(); m(1, 1) = 2;
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK(m.det() == CycNum(2) * CycNum::eta(1) - CycNum::i());
}

TEST_CASE("charpoly annihilates and squarefree part detects semisimplicity") {
    Matrix jb(2, 2);  // Jordan block, eigenvalue i
    jb(0, 0) = CycNum::i(); jb(0, 1) = 1; jb(1, 1) = CycNum::i();
    Poly cp = charpoly(jb);
    CHECK(cp.degree() == 2);
    CHECK(cp.eval(jb).is_zero());
    Poly sf = squarefree_part(cp);
    CHECK(sf.degree() == 1);
    CHECK(!sf.eval(jb).is_zero());
    Matrix d(2, 2);
    d(0, 0) = CycNum::i(); d(1, 1) = -CycNum::i();
    CHECK(squarefree_part(charpoly(d)).eval(d).is_zero());
}
