#include <doctest.h>

#include "rebit/ssorbits.hpp"

using namespace rebit;

TEST_CASE("row parser") {
    auto f = parse_row("i*(-l1+l4, l1, 0, l4)/2", {"l1", "l4"});
    REQUIRE(f.size() == 4);
    std::vector<CycNum> lam{CycNum(2), CycNum(6)};
    CHECK(f[0].eval(lam) == CycNum(2) * CycNum::i());
    CHECK(f[2].eval(lam).is_zero());
    CHECK_THROWS_AS(parse_row("(l1*l4, 0, 0, 0)", {"l1", "l4"}), ParseError);
    CHECK_THROWS_AS(parse_row("(l1, 0, 0", {"l1"}), ParseError);
}

TEST_CASE("GHZ-type state") {
    Tensor ghz = Tensor::basis("0000") + Tensor::basis("1111");
    auto l = classify_semisimple(ghz);
    CHECK(l.i == 10);
    CHECK(l.j == 1);
    CHECK(l.k == 1);
    REQUIRE(l.lambda.size() == 1);
    CHECK(l.lambda[0] == CycNum(1));
}

TEST_CASE("points off the Cartan spaces get a family report") {
    std::mt19937_64 rng(41);
    auto lam = sample_parameters(3, 1)[0];
    for (int k = 1; k <= 3; ++k) {
        Tensor t = table_row(3, 1, k, lam);
        CHECK(classify_semisimple(t).i == 3);
        Tensor moved = act(random_real_element(rng, 1, 2), t);
        try {
            classify_semisimple(moved);
        } catch (const ClassifyError& e) {
            CHECK(e.kind == "general-position");
            CHECK(std::find(e.families.begin(), e.families.end(), 3) != e.families.end());
        }
    }
}

TEST_CASE("rows are real and land in their classes") {
    for (int i : {3, 7, 10}) {
        for (const auto& b : ss_case(i).blocks) {
            auto lam = sample_parameters(i, b.j)[0];
            for (int k = 1; k <= b.row_count(); ++k) {
                Tensor t = table_row(i, b.j, k, lam);
                CHECK(t.is_real());
                auto ks = class_matches(i, b.j, lam, t);
                CHECK(std::find(ks.begin(), ks.end(), k) != ks.end());
            }
        }
    }
}

TEST_CASE("a perturbed row is rejected") {
    CHECK(verify_ss_case(ss_case(10)).ok());
    SSCase bad = ss_case(10);
    bad.blocks[0].rows[0] = "l1*(1,1,0,0)";
    CHECK(!verify_ss_case(bad).ok());
}

TEST_CASE("non-real input is rejected") {
    Tensor t = Tensor::basis("0000").scaled(CycNum::i()) + Tensor::basis("1111");
    CHECK_THROWS_AS(classify_semisimple(t), ClassifyError);
}
