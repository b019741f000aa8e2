// Tabulated semisimple case data. Cases 5, 6 come from 4 and cases 8, 9 from 7
// by permuting tensor slots.

#include "rebit/ssorbits.hpp"

namespace rebit {

namespace {

const std::vector<std::string> kH = {"(I,I,I,I)", "(-I,-I,I,I)", "(-I,I,-I,I)", "(I,-I,-I,I)"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<SSCase> native_cases() {
    std::vector<SSCase> cs;

    SSCase c1;
    c1.i = 1;
    c1.params = {"l1", "l2", "l3", "l4"};
    c1.blocks = {
        {1, {1, 1, 1, 1}, "(I,I,I,I)", "(I,I,I,I)",
         {"(I,I,I,I)", "(I,I,-I,-I)", "(I,-I,I,-I)", "(I,-I,-I,I)", "(K,K,K,K)", "(K,K,-K,-K)", "(K,-K,K,-K)",
          "(K,-K,-K,K)", "(L,L,L,L)", "(L,L,-L,-L)", "(L,-L,L,-L)", "(L,-L,-L,L)"},
         'u', {1, 2, 3, 4},
         {"(l1,l2,l3,l4)", "(-l1,l2,l3,-l4)", "(-l1,l2,-l3,l4)", "(-l1,-l2,l3,l4)",
          "(-l1-l2-l3-l4, l1+l2-l3-l4, l1-l2+l3-l4, l1-l2-l3+l4)/2",
          "(-l1+l2+l3-l4, -l1+l2-l3+l4, -l1-l2+l3+l4, l1+l2+l3+l4)/2",
          "(-l1+l2-l3+l4, -l1+l2+l3-l4, l1+l2+l3+l4, -l1-l2+l3+l4)/2",
          "(-l1-l2+l3+l4, l1+l2+l3+l4, -l1+l2+l3-l4, -l1+l2-l3+l4)/2",
          "(-l1,l2,l3,l4)", "(l1,l2,l3,-l4)", "(l1,l2,-l3,l4)", "(l1,-l2,l3,l4)"},
         {}},
        {2, {-1, -1, -1, -1}, "(-I,I,I,I)", "(L,I,I,I)",
         {"(I,I,I,I)", "(-I,-I,I,I)", "(I,-I,I,-I)", "(-I,I,I,-I)", "(K,K,K,-K)", "(-K,-K,-K,K)", "(K,-K,K,K)",
          "(-K,K,K,K)", "(-L,-L,-L,-L)", "(L,L,-L,-L)", "(-L,L,-L,L)", "(L,-L,-L,L)"},
         'v', {1, 2, 3, 4},
         {"i*(l1,l2,l3,l4)", "i*(-l1,l2,l3,-l4)", "i*(-l1,l2,-l3,l4)", "i*(-l1,-l2,l3,l4)",
          "i*(-l1-l2+l3+l4, l1+l2+l3+l4, -l1+l2+l3-l4, -l1+l2-l3+l4)/2",
          "i*(-l1+l2-l3+l4, -l1+l2+l3-l4, l1+l2+l3+l4, -l1-l2+l3+l4)/2",
          "i*(-l1+l2+l3-l4, -l1+l2-l3+l4, -l1-l2+l3+l4, l1+l2+l3+l4)/2",
          "i*(-l1-l2-l3-l4, l1+l2-l3-l4, l1-l2+l3-l4, l1-l2-l3+l4)/2",
          "i*(-l1,l2,l3,l4)", "i*(l1,l2,l3,-l4)", "i*(l1,l2,-l3,l4)", "i*(l1,-l2,l3,l4)"},
         {}, "", {{6, "(-K,-K,K,-K)"}}},
        {3, {-1, -1, -1, 1}, "(M,M,-N,N)", "(D(eta^5),D(eta^5),-D(eta^3),-D(eta^7))",
         {"(-I,-I,-I,-I)", "(-I,-I,I,I)", "(-I,I,-I,I)", "(-I,I,I,-I)"},
         'w', {1, 2, 3, 4},
         {"(i*l1, i*l2, -i*l3, l4)", "(-i*l1, i*l2, -i*l3, -l4)", "(-i*l1, i*l2, i*l3, l4)",
          "(-i*l1, -i*l2, -i*l3, l4)"},
         {}},
        {4, {-1, -1, 1, 1}, "(L,I,I,L)", "(M,I,I,M)",
         {"(I,I,I,I)", "(I,I,-I,-I)", "(L,L,L,L)", "(L,L,-L,-L)"},
         'x', {1, 2, 3, 4},
         {"(-i*l1, -i*l2, l3, l4)", "(i*l1, -i*l2, l3, -l4)", "(i*l1, -i*l2, l3, l4)", "(-i*l1, -i*l2, l3, -l4)"},
         {}},
        {5, {-1, 1, -1, 1}, "(I,L,I,L)", "(I,M,I,M)",
         {"(I,I,I,I)", "(I,I,-I,-I)", "(L,L,L,L)", "(L,L,-L,-L)"},
         'y', {1, 2, 3, 4},
         {"(-i*l1, l2, i*l3, l4)", "(i*l1, l2, i*l3, -l4)", "(i*l1, l2, i*l3, l4)", "(-i*l1, l2, i*l3, -l4)"},
         {}},
        {6, {-1, 1, 1, -1}, "(I,I,L,L)", "(I,I,M,M)",
         {"(I,I,I,I)", "(I,-I,I,-I)", "(L,L,L,L)", "(L,-L,L,-L)"},
         'z', {1, 2, 3, 4},
         {"(-i*l1, l2, l3, i*l4)", "(i*l1, l2, -l3, i*l4)", "(i*l1, l2, l3, i*l4)", "(-i*l1, l2, -l3, i*l4)"},
         {}},
        {7, {-1, 1, 1, 1}, "(M,M,M,M)", "(D(eta^5),D(eta^5),D(eta^5),D(eta^5))",
         {"(I,I,I,I)", "(I,I,-I,-I)", "(I,-I,I,-I)", "(I,-I,-I,I)"},
         't', {1, 2, 3, 4},
         {"(i*l1, l2, l3, l4)", "(-i*l1, l2, l3, -l4)", "(-i*l1, l2, -l3, l4)", "(-i*l1, -l2, l3, l4)"},
         {}},
    };
    cs.push_back(c1);

    SSCase c2;
    c2.i = 2;
    c2.params = {"l1", "l2", "l3"};
    c2.blocks = {
        {1, {1, 1, 1, 1}, "(I,I,I,I)", "(I,I,I,I)",
         cat(kH, {"(-K,-K,K,K)", "(K,K,K,K)", "(K,-K,-K,K)", "(-K,K,-K,K)"}),
         'u', {1, 2, 3, 4},
         {"(l1,l2,l3,0)", "(-l1,l2,l3,0)", "(-l1,l2,-l3,0)", "(-l1,-l2,l3,0)",
          "(-l1+l2+l3, -l1+l2-l3, -l1-l2+l3, l1+l2+l3)/2",
          "(-l1-l2-l3, l1+l2-l3, l1-l2+l3, l1-l2-l3)/2",
          "(-l1-l2+l3, l1+l2+l3, -l1+l2+l3, -l1+l2-l3)/2",
          "(-l1+l2-l3, -l1+l2+l3, l1+l2+l3, -l1-l2+l3)/2"},
         {}},
        {2, {1, -1, -1, 1}, "(I,I,L,-L)", "(I,I,M,D(zeta))", kH, 'z', {1, 2, 3, 4},
         {"(-i*l3, 0, l1, -i*l2)", "(i*l3, 0, l1, i*l2)", "(i*l3, 0, -l1, -i*l2)", "(i*l3, 0, l1, -i*l2)"},
         {}},
        {3, {1, -1, 1, -1}, "(I,L,I,-L)", "(I,M,I,D(zeta))", kH, 'y', {1, 2, 3, 4},
         {"(0, -l3, -i*l2, l1)", "(0, -l3, -i*l2, -l1)", "(0, -l3, i*l2, l1)", "(0, l3, -i*l2, l1)"},
         {}},
        {4, {-1, -1, 1, 1}, "(L,I,I,L)", "(M,I,I,M)", kH, 'x', {1, 2, 3, 4},
         {"(-i*l1, -i*l2, l3, 0)", "(i*l1, -i*l2, l3, 0)", "(i*l1, -i*l2, -l3, 0)", "(i*l1, i*l2, l3, 0)"},
         {}},
        {5, {1, 1, -1, -1}, "(L,I,I,-L)", "(M,I,I,N)", kH, 'x', {1, 2, 3, 4},
         {"(0, i*l3, -l2, l1)", "(0, i*l3, -l2, -l1)", "(0, i*l3, l2, l1)", "(0, -i*l3, -l2, l1)"},
         {}},
        {6, {-1, 1, -1, 1}, "(I,L,I,L)", "(I,M,I,M)", kH, 'y', {1, 2, 3, 4},
         {"(-i*l1, l2, i*l3, 0)", "(i*l1, l2, i*l3, 0)", "(i*l1, l2, -i*l3, 0)", "(i*l1, -l2, i*l3, 0)"},
         {}},
        {7, {-1, 1, 1, -1}, "(I,I,L,L)", "(I,I,M,M)", kH, 'z', {1, 2, 3, 4},
         {"(-i*l1, l2, l3, 0)", "(i*l1, l2, l3, 0)", "(i*l1, l2, -l3, 0)", "(i*l1, -l2, l3, 0)"},
         {}, "listed with the y-basis; the rows are real points only in the z-space"},
        {8, {-1, -1, -1, -1}, "(-I,I,I,I)", "(L,I,I,I)",
         cat(kH, {"(K,-K,K,K)", "(-K,K,K,K)", "(-K,-K,-K,K)", "(K,K,-K,K)"}),
         'v', {1, 2, 3, 4},
         {"i*(-l1,-l2,-l3,0)", "i*(l1,-l2,-l3,0)", "i*(l1,-l2,l3,0)", "i*(l1,l2,-l3,0)",
          "i*(l1-l2-l3, l1-l2+l3, l1+l2-l3, -l1-l2-l3)/2",
          "i*(l1+l2+l3, -l1-l2+l3, -l1+l2-l3, -l1+l2+l3)/2",
          "i*(l1+l2-l3, -l1-l2-l3, l1-l2-l3, l1-l2+l3)/2",
          "i*(l1-l2+l3, l1-l2-l3, -l1-l2-l3, l1+l2-l3)/2"},
         {}},
    };
    cs.push_back(c2);

    SSCase c3;
    c3.i = 3;
    c3.params = {"l1", "l2"};
    c3.blocks = {
        {1, {1, 1, 1, 1}, "(I,I,I,I)", "(I,I,I,I)", kH, 'u', {1, 2, 3},
         {"(l1+l2, -l1, -l2)", "(-l1-l2, -l1, -l2)", "(-l1-l2, -l1, l2)", "(-l1-l2, l1, -l2)"},
         {}},
        {2, {-1, -1, -1, -1}, "(-I,I,I,I)", "(L,I,I,I)", kH, 'v', {1, 2, 3},
         {"i*(l1+l2, -l1, -l2)", "-i*(l1+l2, l1, l2)", "-i*(l1+l2, l1, -l2)", "-i*(l1+l2, -l1, l2)"},
         {}},
    };
    cs.push_back(c3);

    SSCase c4;
    c4.i = 4;
    c4.params = {"l1", "l4"};
    const std::vector<std::string> z4 = {"(I,I,I,I)", "(-I,I,-I,I)"};
    c4.blocks = {
        {1, {1, 1, 1, 1}, "(I,I,I,I)", "(I,I,I,I)",
         cat(z4, {"(-K,K,-K,K)", "(-K,K,K,-K)", "(K,K,K,K)", "(K,K,-K,-K)"}),
         'u', {1, 2, 3, 4},
         {"(l1,0,0,l4)", "(-l1,0,0,l4)", "(-l1+l4, -l1-l4, l1+l4, -l1+l4)/2",
          "(-l1+l4, l1+l4, -l1-l4, -l1+l4)/2", "(-l1-l4, l1-l4, l1-l4, l1+l4)/2",
          "(-l1-l4, -l1+l4, -l1+l4, l1+l4)/2"},
         {}},
        {2, {-1, 1, 1, 1}, "(M,M,M,M)", "(D(eta^5),D(eta^5),D(eta^5),D(eta^5))", z4, 't', {1, 4},
         {"(i*l1, l4)", "(-i*l1, l4)"},
         {}},
        {3, {-1, 1, 1, -1}, "(I,I,L,L)", "(I,I,M,M)",
         cat(z4, {"(-K,K,-K,-K)", "(K,K,K,-K)", "(-K,K,K,K)", "(K,K,-K,K)"}),
         'v', {1, 2, 3, 4},
         {"i*(-l1,0,0,l4)", "i*(l1,0,0,l4)", "i*(-l1-l4, -l1+l4, -l1+l4, l1+l4)/2",
          "i*(-l1+l4, l1+l4, -l1-l4, -l1+l4)/2", "i*(-l1-l4, l1-l4, l1-l4, l1+l4)/2",
          "i*(-l1+l4, -l1-l4, l1+l4, -l1+l4)/2"},
         {}},
        {4, {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0}, "(L,L,-K,K)", "(M,M,F,LF)",
         cat(z4, {"(-K,-K,-L,-L)", "(K,-K,L,-L)"}),
         'z', {1, 2, 3, 4},
         {"(-i*(l1+l4), l1-l4, -l1+l4, -i*(l1+l4))/2", "(i*(l1+l4), l1-l4, l1-l4, -i*(l1+l4))/2",
          "(i*(l1+l4), l1-l4, -l1+l4, -i*(l1+l4))/2", "(-i*(l1+l4), l1-l4, l1-l4, -i*(l1+l4))/2"},
         {}, "", {{3, "(K,-K,L,-L)"}, {4, "(-K,-K,-L,-L)"}}},
    };
    cs.push_back(c4);

    SSCase c7;
    c7.i = 7;
    c7.params = {"l1"};
    c7.blocks = {
        {1, {1, 1, 1, 1}, "(I,I,I,I)", "(I,I,I,I)", z4, 'u', {1, 4}, {"l1*(1,-1)", "-l1*(1,1)"}, {}},
        {2, {-1, -1, -1, -1}, "(-I,I,I,I)", "(L,I,I,I)", z4, 'v', {1, 4}, {"i*l1*(1,-1)", "-i*l1*(1,1)"}, {}},
    };
    cs.push_back(c7);

    SSCase c10;
    c10.i = 10;
    c10.params = {"l1"};
    c10.blocks = {
        {1, {1, 1, 1, 1}, "(I,I,I,I)", "(I,I,I,I)",
         {"(I,I,I,I)", "(K,K,K,K)", "(-K,K,K,-K)", "(-K,K,-K,K)", "(K,K,-K,-K)"},
         'u', {1, 2, 3, 4},
         {"l1*(1,0,0,0)", "(-2,2,2,2)/l1"},
         {{2, "l1*(-1,1,1,1)/2"}, {3, "l1*(1,-1,1,1)/2"}, {4, "l1*(1,1,-1,1)/2"}, {5, "l1*(1,1,1,-1)/2"}}},
        {2, {-1, -1, -1, -1}, "(-I,I,I,I)", "(L,I,I,I)",
         {"(I,I,I,I)", "(-K,K,K,K)", "(K,K,K,-K)", "(K,K,-K,K)", "(-K,K,-K,-K)"},
         'v', {1, 2, 3, 4},
         {"i*l1*(1,0,0,0)", "(-2,2,2,2)/(i*l1)"},
         {{2, "i*l1*(-1,1,1,1)/2"}, {3, "i*l1*(1,-1,1,1)/2"}, {4, "i*l1*(1,1,-1,1)/2"}, {5, "i*l1*(1,1,1,-1)/2"}}},
    };
    cs.push_back(c10);
    return cs;
}

SSCase permuted(const SSCase& base, int i, const std::array<int, 4>& perm) {
    SSCase c = base;
    c.i = i;
    c.from = base.i;
    c.perm = perm;
    return c;
}

}  // namespace

const SSCase& ss_case(int i) {
    static const std::vector<SSCase> cases = [] {
        auto nat = native_cases();
        auto find = [&](int i) -> const SSCase& {
            for (const auto& c : nat)
                if (c.i == i) return c;
            throw std::logic_error("missing case");
        };
        std::vector<SSCase> all;
        for (int i = 1; i <= 10; ++i) {
            switch (i) {
                case 5: all.push_back(permuted(find(4), 5, perm_23())); break;
                case 6: all.push_back(permuted(find(4), 6, perm_24())); break;
                case 8: all.push_back(permuted(find(7), 8, perm_23())); break;
                case 9: all.push_back(permuted(find(7), 9, perm_24())); break;
                default: all.push_back(find(i));
            }
        }
        return all;
    }();
    if (i < 1 || i > 10) throw MathError("unknown semisimple case " + std::to_string(i));
    return cases[i - 1];
}

const SSBlock& ss_block(int i, int j) {
    const auto& c = ss_case(i);
    for (const auto& b : c.blocks)
        if (b.j == j) return b;
    throw MathError("unknown case (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace rebit
