// Tabulated mixed-element data: the nilpotent elements n_{i,r} and n_{i,j,r}
// and the rows (semisimple part, nilpotent part). Cases 5, 6 come from 4 and
// cases 8, 9 from 7 by permuting tensor slots.

#include "rebit/mixedorbits.hpp"

namespace rebit {

namespace {

using Rows = std::vector<std::string>;

Rows rep(const std::string& s, int n) { return Rows(n, s); }
Rows cat(Rows a, const Rows& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
Rows head(const Rows& a, int n) { return Rows(a.begin(), a.begin() + n); }

MixedBlock block(int i, int j, int r, char basis, Rows ss, Rows nil) {
    MixedBlock b;
    b.i = i;
    b.j = j;
    b.r = r;
    b.basis = basis;
    b.ss = std::move(ss);
    b.nil = std::move(nil);
    return b;
}

std::vector<MixedBlock> native_blocks() {
    std::vector<MixedBlock> bs;

    // p in Sigma
    bs.push_back(block(2, 1, 1, 'u',
                       {"(l1,l2,l3,0)", "(-l1,l2,l3,0)", "(-l1,l2,-l3,0)", "(-l1,-l2,l3,0)", "(-l1,l2,l3,0)",
                        "(l1,l2,l3,0)", "(l1,l2,-l3,0)", "(l1,-l2,l3,0)"},
                       {"e0011", "-e0011", "e0011", "e0011", "e0011", "-e0011", "e0011", "e0011"}));

    const Rows s3 = {"(l1+l2,-l1,-l2,0)", "(-l1-l2,-l1,-l2,0)", "(-l1-l2,-l1,l2,0)", "(-l1-l2,l1,-l2,0)",
                     "(-l1-l2,-l1,-l2,0)", "(l1+l2,-l1,-l2,0)", "(l1+l2,-l1,l2,0)", "(l1+l2,l1,-l2,0)"};
    bs.push_back(block(3, 1, 1, 'u', s3, {"e0011", "-e0011", "e0011", "e0011", "e0011", "-e0011", "e0011", "e0011"}));
    {
        auto b = block(3, 1, 2, 'u',
                       {"(l1+l2,-l1,-l2,0)", "(-l1-l2,-l1,-l2,0)", "(-l1-l2,-l1,l2,0)", "(-l1-l2,l1,-l2,0)",
                        "(-l1-l2,l1,-l2,0)", "(-l1-l2,-l1,l2,)", "(-l1-l2,-l1,-l2,0)", "(l1+l2,-l1,-l2,0)"},
                       {"e1011+e0111+e0010+e0001", "e1011+e0111-e0010-e0001", "-e1011+e0111+e0010-e0001",
                        "-e1011+e0111-e0010+e0001", "e1011-e0111+e0010-e0001", "e1011-e0111-e0010+e0001",
                        "-e1011-e0111+e0010+e0001", "-e1011-e0111-e0010-e0001"});
        b.ss_amended[6] = "(-l1-l2,-l1,l2,0)";
        b.note = "row 6: last semisimple coordinate missing, 0 supplied";
        bs.push_back(b);
    }

    const Rows s4 = {"(l1,0,0,l4)", "(-l1,0,0,-l4)", "(-l1,0,0,l4)", "(-l1,0,0,l4)",
                     "(-l1,0,0,l4)", "(l1,0,0,-l4)", "(l1,0,0,l4)", "(l1,0,0,l4)"};
    bs.push_back(block(4, 1, 1, 'u', s4,
                       {"e1010+e0110", "e1010+e0110", "-e1010+e0110", "e1010-e0110", "e1010+e0110", "e1010+e0110",
                        "-e1010+e0110", "e1010-e0110"}));
    bs.push_back(block(4, 1, 2, 'u', s4,
                       {"e0110+e0101", "e0110+e0101", "e0110-e0101", "-e0110+e0101", "e0110+e0101", "e0110+e0101",
                        "e0110-e0101", "-e0110+e0101"}));
    bs.push_back(block(4, 1, 3, 'u', head(s4, 4), {"e0110", "e0110", "e0110", "-e0110"}));
    bs.push_back(block(4, 1, 4, 'u', head(s4, 4), {"e0101", "e0101", "-e0101", "e0101"}));

    const Rows s7 = {"(l1,0,0,-l1)",  "(-l1,0,0,l1)",  "(-l1,0,0,-l1)", "(-l1,0,0,-l1)",
                     "(-l1,0,0,-l1)", "(-l1,0,0,-l1)", "(-l1,0,0,l1)",  "(l1,0,0,-l1)"};
    {
        auto b = block(7, 1, 1, 'u', s7,
                       {"e1101+e1011+e1000+e0001", "-e1101+e1011+e1000-e0001", "e1101-e1011+e1000-e0001",
                        "-e1101-e1011+e1000+e0001", "e1101+e1011-e1000-e0001", "-e1101+e1011-e1000+e0001",
                        "e1101-e1011-e1000+e0001", "-e1101-e1011-e1000-e1112"});
        b.nil_amended[8] = "-e1101-e1011-e1000-e0001";
        b.note = "row 8: malformed index 1112 read as 0001";
        bs.push_back(b);
    }
    bs.push_back(block(7, 1, 2, 'u', s7,
                       {"e1101+e1010+e0001", "-e1101+e1010-e0001", "e1101-e1010-e0001", "-e1101+e1010+e0001",
                        "e1101+e1010-e0001", "-e1101-e1010+e0001", "e1101+e1010+e0001", "-e1101+e1010-e0001"}));
    bs.push_back(block(7, 1, 3, 'u', s7,
                       {"e1011+e1000+e0101", "e1011+e1000+e0101", "-e1011+e1000-e0101", "-e1011+e1000+e0101",
                        "e1011-e1000+e0101", "e1011-e1000-e0101", "-e1011-e1000+e0101", "-e1011-e1000+e0101"}));
    bs.push_back(block(7, 1, 4, 'u',
                       cat(head(s7, 4), {"(0,l1,l1,0)", "(0,l1,l1,0)", "(0,l1,-l1,0)", "(0,-l1,l1,0)"}),
                       {"e1011+e1000", "e1011+e1000", "-e1011+e1000", "e1011-e1000",
                        "1/2*(-e1111+e1100+e1011-e1000-e0111+e0100+e0011-e0000)",
                        "1/2*(e1111-e1100-e1011+e1000+e0111-e0100-e0011+e0000)",
                        "1/2*(e1111+e1100+e1011+e1000+e0111+e0100+e0011+e0000)",
                        "1/2*(e1111+e1100+e1011+e1000+e0111+e0100+e0011+e0000)"}));
    bs.push_back(block(7, 1, 5, 'u',
                       cat(head(s7, 4), {"(0,-l1,-l1,0)", "(0,l1,l1,0)", "(0,-l1,l1,0)", "(0,l1,-l1,0)"}),
                       {"-e1101-e0001", "-e1101-e0001", "e1101-e0001", "-e1101+e0001",
                        "1/2*(-e1111-e1110+e1101+e1100+e0011+e0010-e0001-e0000)",
                        "1/2*(-e1111-e1110+e1101+e1100+e0011+e0010-e0001-e0000)",
                        "1/2*(e1111-e1110-e1101+e1100+e0011-e0010-e0001+e0000)",
                        "1/2*(e1111-e1110-e1101+e1100+e0011-e0010-e0001+e0000)"}));
    bs.push_back(block(7, 1, 6, 'u', head(s7, 4), {"e1001", "e1001", "e1001", "-e1001"}));

    const Rows s10 = cat(cat({"(l1,0,0,0)"}, rep("(-l1,0,0,0)", 4)), rep("(l1,0,0,0)", 3));
    const Rows s10b = cat({"(l1,0,0,0)"}, rep("(-l1,0,0,0)", 3));
    const Rows s10c = {"(l1,0,0,0)", "(-l1,0,0,0)"};
    bs.push_back(block(10, 1, 1, 'u', s10,
                       {"e1100+e1010+e0110", "-e1100+e1010+e0110", "e1100-e1010+e0110", "e1100+e1010-e0110",
                        "e1100+e1010+e0110", "-e1100+e1010+e0110", "e1100-e1010+e0110", "e1100+e1010-e0110"}));
    bs.push_back(block(10, 1, 2, 'u', s10b, {"e1010+e0110", "e1010+e0110", "-e1010+e0110", "e1010-e0110"}));
    bs.push_back(block(10, 1, 3, 'u', s10,
                       {"e1010+e0110+e0011", "e1010+e0110-e0011", "-e1010+e0110+e0011", "e1010-e0110+e0011",
                        "e1010+e0110+e0011", "e1010+e0110-e0011", "-e1010+e0110+e0011", "e1010-e0110+e0011"}));
    bs.push_back(block(10, 1, 4, 'u', s10b, {"e1100+e0110", "-e1100+e0110", "e1100+e0110", "e1100-e0110"}));
    bs.push_back(block(10, 1, 5, 'u', s10c, {"e0110", "e0110"}));
    bs.push_back(block(10, 1, 6, 'u', s10b, {"e0110+e0011", "e0110-e0011", "e0110+e0011", "-e0110+e0011"}));
    bs.push_back(block(10, 1, 7, 'u', s10,
                       {"e1100+e0110+e0101", "-e1100+e0110+e0101", "e1100+e0110-e0101", "e1100-e0110+e0101",
                        "e1100+e0110+e0101", "-e1100+e0110+e0101", "e1100+e0110-e0101", "e1100-e0110+e0101"}));
    bs.push_back(block(10, 1, 8, 'u', s10b, {"e0110+e0101", "e0110+e0101", "e0110-e0101", "-e0110+e0101"}));
    bs.push_back(block(10, 1, 9, 'u', s10,
                       {"e0110+e0101+e0011", "e0110+e0101-e0011", "e0110-e0101+e0011", "-e0110+e0101+e0011",
                        "e0110+e0101+e0011", "e0110+e0101-e0011", "e0110-e0101+e0011", "-e0110+e0101+e0011"}));
    bs.push_back(block(10, 1, 10, 'u', s10b, {"e1100+e1010", "-e1100+e1010", "e1100-e1010", "e1100+e1010"}));
    bs.push_back(block(10, 1, 11, 'u', s10c, {"e1010", "e1010"}));
    bs.push_back(block(10, 1, 12, 'u', s10b, {"e1010+e0011", "e1010-e0011", "-e1010+e0011", "e1010+e0011"}));
    bs.push_back(block(10, 1, 13, 'u', s10c, {"e0011", "e0011"}));

    // p outside Sigma
    const Rows n2a = {"e0011", "-e0011", "e0011", "e0011", "e0011", "-e0011", "e0011", "e0011"};
    const Rows n2b = {"e0000", "-e0000", "-e0000", "-e0000", "-e0000", "e0000", "e0000", "e0000"};
    bs.push_back(block(2, 2, 1, 'z',
                       {"(-i*l3,0,l1,-i*l2)", "(i*l3,0,l1,i*l2)", "(i*l3,0,-l1,-i*l2)", "(i*l3,0,l1,-i*l2)",
                        "(i*l3,0,l1,-i*l2)", "(-i*l3,0,l1,i*l2)", "(-i*l3,0,-l1,-i*l2)", "(-i*l3,0,l1,-i*l2)"},
                       {"-e0110", "-e0110", "-e0110", "e0110", "-e0110", "-e0110", "-e0110", "e0110"}));
    {
        auto b = block(2, 3, 1, 'y',
                       {"(0,-l3,-i*l2,l1)", "(0,-l3,-i*l2,-l1)", "(0,-l3,i*l2,l1)", "(0,l3,-i*l2,l1)",
                        "(0,-l3,-i*l2,l1)", "(0,-l3,-i*l2,-l1)", "0,-l3,i*l2,l1", "(0,l3,-i*l2,l1)"},
                       n2b);
        b.ss_amended[7] = "(0,-l3,i*l2,l1)";
        b.note = "row 7: parentheses missing";
        bs.push_back(b);
    }
    bs.push_back(block(2, 4, 1, 'x',
                       {"(-i*l1,-i*l2,l3,0)", "(i*l1,-i*l2,l3,0)", "(i*l1,-i*l2,-l3,0)", "(i*l1,i*l2,l3,0)",
                        "(i*l1,-i*l2,l3,0)", "(-i*l1,-i*l2,l3,0)", "(-i*l1,-i*l2,-l3,0)", "(-i*l1,i*l2,l3,0)"},
                       n2a));
    bs.push_back(block(2, 5, 1, 'x',
                       {"(0,i*l3,-l2,l1)", "(0,i*l3,-l2,-l1)", "(0,i*l3,l2,l1)", "(0,-i*l3,-l2,l1)",
                        "(0,i*l3,-l2,l1)", "(0,i*l3,-l2,-l1)", "(0,i*l3,l2,l1)", "(0,-i*l3,-l2,l1)"},
                       n2b));
    bs.push_back(block(2, 6, 1, 'y',
                       {"(-i*l1,l2,i*l3,0)", "(i*l1,l2,i*l3,0)", "(i*l1,l2,-i*l3,0)", "(i*l1,-l2,i*l3,0)",
                        "(i*l1,l2,i*l3,0)", "(-i*l1,l2,i*l3,0)", "(-i*l1,l2,-i*l3,0)", "(-i*l1,-l2,i*l3,0)"},
                       n2a));
    {
        auto b = block(2, 7, 1, 'z',
                       {"(-i*l1,l2,l3,0)", "(i*l1,l2,l3,0)", "(i*l1,l2,-l3,0)", "(i*l1,-l2,l3,0)",
                        "(i*l1,l2,l3,0)", "(-i*l1,l2,l3,0)", "(-i*l1,l2,-l3,0)", "(-i*l1,-l2,l3,0)"},
                       {"e0011", "-e0011", "e0011", "e0011", "e0011", "-e0011", "e0011", "-e0011"});
        b.note = "listed with the y-basis; read in the z-basis as for the semisimple rows";
        bs.push_back(b);
    }
    bs.push_back(block(2, 8, 1, 'v',
                       {"(i*l1,i*l2,i*l3,0)", "(-i*l1,i*l2,i*l3,0)", "(-i*l1,i*l2,-i*l3,0)", "(-i*l1,-i*l2,i*l3,0)",
                        "(-i*l1,i*l2,i*l3,0)", "(i*l1,i*l2,i*l3,0)", "(i*l1,i*l2,-i*l3,0)", "(i*l1,-i*l2,i*l3,0)"},
                       n2a));

    bs.push_back(block(3, 2, 1, 'v',
                       {"(i*l1+i*l2,-i*l1,-i*l2,0)", "(-i*l1-i*l2,-i*l1,-i*l2,0)", "(-i*l1-i*l2,-i*l1,i*l2,0)",
                        "(-i*l1-i*l2,i*l1,-i*l2,0)", "(-i*l1-i*l2,-i*l1,-i*l2,0)", "(i*l1+i*l2,-i*l1,-i*l2,0)",
                        "(i*l1+i*l2,-i*l1,i*l2,0)", "(i*l1+i*l2,i*l1,-i*l2,0)"},
                       n2a));
    bs.push_back(block(3, 2, 2, 'v',
                       {"(i*l1+i*l2,-i*l1,-i*l2,0)", "(-i*l1-i*l2,-i*l1,-i*l2,0)", "(-i*l1-i*l2,-i*l1,i*l2,0)",
                        "(-i*l1-i*l2,i*l1,-i*l2,0)", "(-i*l1-i*l2,i*l1,-i*l2,0)", "(-i*l1-i*l2,-i*l1,i*l2,0)",
                        "(-i*l1-i*l2,-i*l1,-i*l2,0)", "(i*l1+i*l2,-i*l1,-i*l2,0)"},
                       {"e1011-e0111-e0010-e0001", "e1011-e0111+e0010+e0001", "-e1011-e0111-e0010+e0001",
                        "-e1011-e0111+e0010-e0001", "e1011+e0111-e0010+e0001", "e1011+e0111+e0010-e0001",
                        "-e1011+e0111-e0010-e0001", "-e1011+e0111+e0010+e0001"}));

    const Rows n4_1 = {"e1010+e0110", "e1010+e0110", "-e1010+e0110", "e1010-e0110",
                       "e1010+e0110", "e1010+e0110", "-e1010+e0110", "e1010-e0110"};
    const Rows n4_2 = {"e0110+e0101", "e0110+e0101", "e0110-e0101", "-e0110+e0101",
                       "e0110+e0101", "e0110+e0101", "e0110-e0101", "-e0110+e0101"};
    const Rows n4_3 = {"e0110", "e0110", "e0110", "-e0110"};
    const Rows n4_4 = {"e0101", "e0101", "-e0101", "e0101"};
    const Rows s42 = {"(i*l1,0,0,l4)",  "(-i*l1,0,0,-l4)", "(-i*l1,0,0,l4)", "(-i*l1,0,0,l4)",
                      "(-i*l1,0,0,l4)", "(i*l1,0,0,-l4)",  "(i*l1,0,0,l4)",  "(i*l1,0,0,l4)"};
    bs.push_back(block(4, 2, 1, 't', s42, n4_1));
    bs.push_back(block(4, 2, 2, 't', s42, n4_2));
    bs.push_back(block(4, 2, 3, 't', head(s42, 4), n4_3));
    bs.push_back(block(4, 2, 4, 't', head(s42, 4), n4_4));
    const Rows s43 = {"(-i*l1,0,0,i*l4)", "(i*l1,0,0,-i*l4)",  "(i*l1,0,0,i*l4)",   "(i*l1,0,0,i*l4)",
                      "(i*l1,0,0,i*l4)",  "(-i*l1,0,0,-i*l4)", "(-i*l1,0,0,i*l4)", "(-i*l1,0,0,i*l4)"};
    for (int r = 1; r <= 4; ++r) {
        auto b = block(4, 3, r, 'v', r <= 2 ? s43 : head(s43, 4), r == 1 ? n4_1 : r == 2 ? n4_2 : r == 3 ? n4_3 : n4_4);
        b.note = "listed with the z-basis; read in the v-basis as for the semisimple rows";
        bs.push_back(b);
    }
    {
        const std::string a = "1/2*(e1110+e1101+e1010+e1001+e0110+e0101+e0010+e0001)";
        bs.push_back(block(4, 4, 1, 'z',
                           {"(-i*(l1+l4), l1-l4, -l1+l4, -i*(l1+l4))/2", "(i*(l1+l4), l1-l4, -l1+l4, i*(l1+l4))/2",
                            "(i*(l1+l4), l1-l4, l1-l4, -i*(l1+l4))/2", "(i*(l1+l4), -l1+l4, -l1+l4, -i*(l1+l4))/2"},
                           {a, a, "1/2*(e1110-e1101-e1010+e1001-e0110-e0101+e0010+e0001)",
                            "1/2*(-e1110+e1101+e1010-e1001-e0110+e0101+e0010-e0001)"}));
    }

    const Rows s72 = {"(i*l1,0,0,-i*l1)",  "(-i*l1,0,0,i*l1)",  "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)",
                      "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,i*l1)",  "(i*l1,0,0,-i*l1)"};
    bs.push_back(block(7, 2, 1, 'v', s72,
                       {"-e1101-e1011-e1000+e0001", "e1101-e1011-e1000-e0001", "-e1101+e1011-e1000-e0001",
                        "e1101+e1011-e1000+e0001", "-e1101-e1011+e1000-e0001", "e1101-e1011+e1000+e0001",
                        "-e1101+e1011+e1000+e0001", "e1101+e1011+e1000-e0001"}));
    bs.push_back(block(7, 2, 2, 'v', s72,
                       {"-e1101-e1010+e0001", "e1101-e1010-e0001", "-e1101+e1010-e0001", "e1101-e1010+e0001",
                        "-e1101-e1010-e0001", "e1101+e1010+e0001", "-e1101-e1010+e0001", "e1101-e1010-e0001"}));
    bs.push_back(block(7, 2, 3, 'v', s72,
                       {"-e1011-e1000+e0101", "-e1011-e1000+e0101", "e1011-e1000-e0101", "e1011-e1000+e0101",
                        "-e1011+e1000+e0101", "-e1011+e1000-e0101", "e1011+e1000+e0101", "e1011+e1000+e0101"}));
    bs.push_back(block(7, 2, 4, 'v',
                       {"(i*l1,0,0,-i*l1)", "(-i*l1,0,0,i*l1)", "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)",
                        "(-i*l1,0,0,i*l1)", "(i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)"},
                       {"e1011+e1000", "e1011+e1000", "-e1011+e1000", "e1011-e1000",
                        "1/2*(-e1110-e1101+e1010+e1001-e0110-e0101+e0010+e0001)",
                        "1/2*(-e1110-e1101+e1010+e1001-e0110-e0101+e0010+e0001)",
                        "1/2*(e1110-e1101+e1010-e1001+e0110-e0101+e0010-e0001)",
                        "1/2*(-e1110+e1101-e1010+e1001-e0110+e0101-e0010+e0001)"}));
    bs.push_back(block(7, 2, 5, 'v',
                       {"(i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)", "(-i*l1,0,0,i*l1)",
                        "(i*l1,0,0,i*l1)", "(i*l1,0,0,-i*l1)", "(i*l1,0,0,-i*l1)", "(-i*l1,0,0,-i*l1)"},
                       {"-e1101+e0001", "-e1101-e0001", "e1101+e0001", "-e1101+e0001",
                        "1/2*(-e1011-e1010+e1001+e1000-e0111-e0110+e0101+e0100)",
                        "1/2*(e1011-e1010-e1001+e1000-e0111+e0110+e0101-e0100)",
                        "1/2*(-e1011+e1010+e1001-e1000+e0111-e0110-e0101+e0100)",
                        "1/2*(-e1011-e1010+e1001+e1000-e0111-e0110+e0101+e0100)"}));
    bs.push_back(block(7, 2, 6, 'v', head(s72, 4), {"e1001", "e1001", "e1001", "-e1001"}));

    const Rows t10 = cat(cat({"(i*l1,0,0,0)"}, rep("(-i*l1,0,0,0)", 4)), rep("(i*l1,0,0,0)", 3));
    const Rows t10b = cat({"(i*l1,0,0,0)"}, rep("(-i*l1,0,0,0)", 3));
    const Rows t10c = {"(i*l1,0,0,0)", "(-i*l1,0,0,0)"};
    bs.push_back(block(10, 2, 1, 'v', t10,
                       {"-e1100-e1010+e0110", "e1100-e1010+e0110", "-e1100+e1010+e0110", "-e1100-e1010-e0110",
                        "-e1100-e1010+e0110", "e1100-e1010+e0110", "-e1100+e1010+e0110", "-e1100-e1010-e0110"}));
    bs.push_back(block(10, 2, 2, 'v', t10b, {"-e1010+e0110", "-e1010+e0110", "e1010+e0110", "-e1010-e0110"}));
    bs.push_back(block(10, 2, 3, 'v', t10,
                       {"-e1010+e0110+e0011", "-e1010+e0110-e0011", "e1010+e0110+e0011", "-e1010-e0110+e0011",
                        "-e1010+e0110+e0011", "-e1010+e0110-e0011", "e1010+e0110+e0011", "-e1010-e0110+e0011"}));
    bs.push_back(block(10, 2, 4, 'v', t10b, {"-e1100+e0110", "e1100+e0110", "-e1100+e0110", "-e1100-e0110"}));
    bs.push_back(block(10, 2, 5, 'v', t10c, {"e0110", "e0110"}));
    bs.push_back(block(10, 2, 6, 'v', t10b, {"e0110+e0011", "e0110-e0011", "e0110+e0011", "-e0110+e0011"}));
    bs.push_back(block(10, 2, 7, 'v', t10,
                       {"-e1100+e0110+e0101", "e1100+e0110+e0101", "-e1100+e0110-e0101", "-e1100-e0110+e0101",
                        "-e1100+e0110+e0101", "e1100+e0110+e0101", "-e1100+e0110-e0101", "-e1100-e0110+e0101"}));
    bs.push_back(block(10, 2, 8, 'v', t10b, {"e0110+e0101", "e0110+e0101", "e0110-e0101", "-e0110+e0101"}));
    bs.push_back(block(10, 2, 9, 'v', t10,
                       {"e0110-e0101-e0011", "e0110-e0101+e0011", "e0110+e0101-e0011", "-e0110-e0101-e0011",
                        "e0110-e0101-e0011", "e0110-e0101+e0011", "e0110+e0101-e0011", "-e0110-e0101-e0011"}));
    bs.push_back(block(10, 2, 10, 'v', t10b, {"-e1100-e1010", "e1100-e1010", "-e1100+e1010", "-e1100-e1010"}));
    bs.push_back(block(10, 2, 11, 'v', t10c, {"-e1010", "-e1010"}));
    bs.push_back(block(10, 2, 12, 'v', t10b, {"-e1010+e0011", "-e1010-e0011", "e1010+e0011", "-e1010+e0011"}));
    bs.push_back(block(10, 2, 13, 'v', t10c, {"e0011", "e0011"}));
    return bs;
}

}  // namespace

int nilpotent_count(int i) {
    static const int counts[11] = {0, 0, 1, 2, 4, 4, 4, 6, 6, 6, 13};
    if (i < 2 || i > 10) return 0;
    return counts[i];
}

Tensor nilpotent_n(int i, int r) {
    static const std::map<int, std::vector<std::string>> table = {
        {2, {"e0011"}},
        {3, {"e0011", "e0111+e1011+e0010+e0001"}},
        {4, {"e0110+e1010", "e0110+e0101", "e0110", "e0101"}},
        {5, {"e0110+e1100", "e0110+e0011", "e0110", "e0011"}},
        {6, {"e0011+e1010", "e0011+e0101", "e0011", "e0101"}},
        {7, {"e1101+e1011+e1000+e0001", "e1101+e1010+e0001", "e1011+e1000+e0101", "e1011+e1000", "e1101+e0001",
             "e1001"}},
        {8, {"e1011+e1101+e1000+e0001", "e1011+e1100+e0001", "e1101+e1000+e0011", "e1101+e1000", "e1011+e0001",
             "e1001"}},
        {9, {"e1101+e1110+e1000+e0100", "e1101+e1010+e0100", "e1110+e1000+e0101", "e1110+e1000", "e1101+e0100",
             "e1100"}},
        {10, {"e1100+e1010+e0110", "e1010+e0110", "e1010+e0110+e0011", "e1100+e0110", "e0110", "e0110+e0011",
              "e1100+e0110+e0101", "e0110+e0101", "e0110+e0101+e0011", "e1100+e1010", "e1010", "e1010+e0011",
              "e0011"}},
    };
    auto it = table.find(i);
    if (it == table.end() || r < 1 || r > static_cast<int>(it->second.size()))
        throw MathError("no nilpotent element n_{" + std::to_string(i) + "," + std::to_string(r) + "}");
    return parse_tensor(it->second[r - 1]);
}

std::optional<Tensor> nilpotent_nj(int i, int j, int r) {
    static const std::map<std::array<int, 3>, std::string> table = [] {
        std::map<std::array<int, 3>, std::string> t;
        t[{2, 2, 1}] = "-e0110";
        for (int j : {4, 6, 7, 8}) t[{2, j, 1}] = "e0011";
        for (int j : {3, 5}) t[{2, j, 1}] = "e0000";
        t[{3, 2, 1}] = "-e0011";
        t[{3, 2, 2}] = "-e0111+e1011-e0010-e0001";
        for (int j : {2, 3}) {
            t[{4, j, 1}] = "e0110+e1010";
            t[{4, j, 2}] = "e0110+e0101";
            t[{4, j, 3}] = "e0110";
            t[{4, j, 4}] = "e0101";
        }
        t[{4, 4, 1}] = "-1/2*(-e1110-e1101+e1010+e1001+e0110+e0101-e0010-e0001)";
        const char* n7[] = {"-e1101-e1011-e1000+e0001", "-e1101-e1010+e0001", "-e1011-e1000+e0101",
                            "-e1011-e1000",             "-e1101+e0001",       "-e1001"};
        for (int r = 1; r <= 6; ++r) t[{7, 2, r}] = n7[r - 1];
        const char* n10[] = {"-e1100-e1010+e0110", "-e1010+e0110",       "-e1010+e0110+e0011", "-e1100+e0110",
                             "e0110",              "e0110+e0011",        "-e1100+e0110+e0101", "e0110+e0101",
                             "e0110-e0101-e0011",  "-e1100-e1010",       "-e1010",             "-e1010+e0011",
                             "e0011"};
        for (int r = 1; r <= 13; ++r) t[{10, 2, r}] = n10[r - 1];
        return t;
    }();
    auto it = table.find({i, j, r});
    if (it == table.end()) return std::nullopt;
    return parse_tensor(it->second);
}

int nilpotent_source(int i, int j, int r) {
    // n_{4,1} has no real point for j = 4 and n_{4,3}, n_{4,4} are discarded there
    if (i == 4 && j == 4) return 2;
    return r;
}

const std::vector<MixedBlock>& mixed_blocks() {
    static const std::vector<MixedBlock> all = [] {
        auto nat = native_blocks();
        std::vector<MixedBlock> out = nat;
        for (const auto& b : nat) {
            auto add = [&](int i, const std::array<int, 4>& perm) {
                MixedBlock c = b;
                c.i = i;
                c.from = b.i;
                c.perm = perm;
                out.push_back(c);
            };
            if (b.i == 4) {
                add(5, perm_23());
                add(6, perm_24());
            } else if (b.i == 7) {
                add(8, perm_23());
                add(9, perm_24());
            }
        }
        return out;
    }();
    return all;
}

const MixedBlock& mixed_block(int i, int j, int r) {
    for (const auto& b : mixed_blocks())
        if (b.i == i && b.j == j && b.r == r) return b;
    throw MathError("no mixed block (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + ")");
}

std::vector<const MixedBlock*> mixed_blocks_of(int i) {
    std::vector<const MixedBlock*> out;
    for (const auto& b : mixed_blocks())
        if (i == 0 || b.i == i) out.push_back(&b);
    return out;
}

}  // namespace rebit
