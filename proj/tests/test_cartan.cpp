#include <doctest.h>

#include <set>

#include "rebit/cartan.hpp"
#include "rebit/galois.hpp"

using namespace rebit;

TEST_CASE("restricted root data") {
    const auto& cd = CartanData::get();
    CHECK(cd.roots.size() == 24);
    CHECK(cd.weyl.size() == 192);
    CHECK(cd.center.size() == 32);
    CHECK(cd.normalizer.size() == 6144);
    CHECK(cd.subsystems.size() == 11);
}

TEST_CASE("reflections s_a(p) = p - a(p) h_a lie in W") {
    const auto& cd = CartanData::get();
    for (const auto& r : cd.roots) {
        Matrix s = Matrix::identity(4);
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 4; ++col) s(row, col) -= r.coroot[row] * r.values[col];
        CHECK(cd.weyl_index(s) >= 0);
        HVec p{CycNum(3), CycNum(5), CycNum(7), CycNum(11)};
        HVec sp = rebit::apply(s, p);
        CycNum a = root_value(r, p);
        for (int k = 0; k < 4; ++k) CHECK(sp[k] == p[k] - a * r.coroot[k]);
    }
}

TEST_CASE("W permutes the restricted roots") {
    const auto& cd = CartanData::get();
    std::set<std::string> keys;
    auto key = [](const Vec& v) {
        std::string s;
        for (const auto& x : v) s += x.str() + ";";
        return s;
    };
    for (const auto& r : cd.roots) keys.insert(key(Vec(r.values.begin(), r.values.end())));
    for (const auto& w : cd.weyl)
        for (const auto& r : cd.roots) {
            Vec img(4);
            for (int c = 0; c < 4; ++c)
                for (int k = 0; k < 4; ++k) img[c] += r.values[k] * w(k, c);
            CHECK(keys.count(key(img)) == 1);
        }
}

TEST_CASE("Cartan spaces: commuting semisimple bases and witnesses") {
    for (const auto& c : cartan_spaces()) {
        CHECK(coboundary(c.witness) == cartan_cocycle(c.m));
        for (int a = 0; a < 4; ++a) {
            CHECK(c.basis[a].is_real());
            CHECK(is_semisimple(from_tensor(c.basis[a])));
            for (int b = 0; b < 4; ++b) CHECK(bracket(c.basis[a], c.basis[b]).is_zero());
        }
        CHECK(cartan_detect(c.basis[0] + c.basis[1] + c.basis[2] + c.basis[3]).has_value());
    }
}

TEST_CASE("membership of a generic point") {
    HVec p{CycNum(1), CycNum(2), CycNum(5), CycNum(11)};
    CHECK(vanishing_roots(p).empty());
    CHECK(component_membership(p).i == 1);
}
