#include "rebit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "rebit/invariants.hpp"
#include "rebit/mixedorbits.hpp"

namespace rebit {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed checks; the first few go into the detail line.
struct Checks {
    std::vector<std::string> failed;
    int total = 0;
    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) failed.push_back(what);
    }
    std::string summary(const std::string& extra = "") const {
        std::ostringstream os;
        os << (total - static_cast<int>(failed.size())) << "/" << total << " checks";
        if (!extra.empty()) os << "; " << extra;
        for (std::size_t k = 0; k < failed.size() && k < 6; ++k) os << "; " << failed[k];
        if (failed.size() > 6) os << "; +" << failed.size() - 6 << " more";
        return os.str();
    }
};

CriterionResult finish(int id, std::string name, const Checks& c, Clock::time_point t0, double limit,
                       const std::string& extra = "") {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.seconds = since(t0);
    r.pass = c.failed.empty() && (limit <= 0 || r.seconds < limit);
    r.detail = c.summary(extra);
    if (limit > 0 && r.seconds >= limit) r.detail += "; over the time limit";
    return r;
}

CycNum small_gaussian(std::mt19937_64& rng) {
    auto part = [&] { return CycNum(static_cast<long>(rng() % 5) - 2, static_cast<long>(1 + rng() % 2)); };
    return part() + part() * CycNum::i();
}

Tensor random_tensor(std::mt19937_64& rng, bool sparse) {
    Tensor t;
    if (!sparse) {
        for (auto& c : t.t) c = small_gaussian(rng);
        return t;
    }
    int count = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) t.t[rng() % 16] = small_gaussian(rng);
    return t;
}

}  // namespace

CriterionResult criterion_structure() {
    auto t0 = Clock::now();
    Checks c;
    const auto& g = D4::get();
    c.expect(kDim == 28 && g.roots().size() == 24, "dimension");
    auto bad = check_structure();
    c.expect(bad.empty(), "Jacobi/structure: " + (bad.empty() ? std::string() : bad.front()));
    int deg[2] = {0, 0};
    for (int a = 0; a < kDim; ++a) ++deg[g.degree(a)];
    c.expect(deg[0] == 12 && deg[1] == 16, "grading " + std::to_string(deg[0]) + "+" + std::to_string(deg[1]));
    // four sl2 ideals of g0: closed, non-abelian, mutually commuting
    for (int k = 0; k < 4; ++k)
        for (int l = k; l < 4; ++l) {
            bool ok = true, nonabelian = false;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    Graded br = to_graded(bracket(from_g0(G0Elt::basis(3 * k + a)), from_g0(G0Elt::basis(3 * l + b))));
                    if (!br.x1.is_zero()) ok = false;
                    for (int s = 0; s < 4; ++s)
                        if (!br.x0.x[s].is_zero()) {
                            if (k != l || s != k) ok = false;
                            nonabelian = true;
                        }
                }
            if (k == l)
                c.expect(ok && nonabelian, "slot " + std::to_string(k + 1) + " is not an sl2 ideal");
            else
                c.expect(ok, "slots " + std::to_string(k + 1) + "," + std::to_string(l + 1) + " do not commute");
        }
    return finish(1, "structure", c, t0, 10);
}

CriterionResult criterion_restricted() {
    auto t0 = Clock::now();
    Checks c;
    const auto& cd = CartanData::get();
    auto check = [&](const char* what, std::size_t got, std::size_t want) {
        c.expect(got == want, std::string(what) + " = " + std::to_string(got));
    };
    check("|Phi|", cd.roots.size(), 24);
    check("|W|", cd.weyl.size(), 192);
    check("|Z(h)|", cd.center.size(), 32);
    check("|N|", cd.normalizer.size(), 6144);
    return finish(2, "restricted roots and normalizer", c, t0, 0);
}

CriterionResult criterion_cohomology() {
    auto t0 = Clock::now();
    Checks c;
    auto hn = normalizer_group().h1().reps.size();
    c.expect(hn == 7, "|H1(N)| = " + std::to_string(hn));
    const int cases[6] = {1, 2, 3, 4, 7, 10};
    const int gamma_h1[6] = {7, 8, 2, 4, 2, 2};
    const int lists[6] = {12, 8, 4, 6, 2, 5};
    for (int k = 0; k < 6; ++k) {
        int i = cases[k];
        auto h = gamma_group(i).h1().reps.size();
        c.expect(static_cast<int>(h) == gamma_h1[k], "|H1(Gamma_" + std::to_string(i) + ")| = " + std::to_string(h));
        const auto& sc = ss_case(i);
        const auto& b = ss_block(i, 1);
        auto zs = block_z(sc, b);
        auto rep = verify_class_list(semisimple_centralizer(i).framed(block_g(sc, b)), zs, lists[k]);
        c.expect(rep.ok, "class list of Z_" + std::to_string(i) + ": " +
                             (rep.failures.empty() ? std::string() : rep.failures.front()));
    }
    return finish(3, "cohomology counts", c, t0, 120);
}

CriterionResult criterion_lifts() {
    auto t0 = Clock::now();
    Checks c;
    const auto& eps = epsilon_table();
    c.expect(eps.size() == 9, "epsilon rows = " + std::to_string(eps.size()));
    for (const auto& e : eps) c.expect(e.eps.inv() * e.eps.conj() == e.a, "epsilon(" + e.name + ")");
    const auto& lifts = weyl_cocycle_lifts();
    c.expect(lifts.size() == 16, "cocycles = " + std::to_string(lifts.size()));
    for (const auto& l : lifts) {
        c.expect((l.n * l.n.conj()).is_identity(), l.name + " is not a cocycle");
        auto w = weyl_of(l.n);
        c.expect(w && *w == l.w, l.name + " does not induce its Weyl element");
    }
    return finish(4, "epsilon map and Weyl cocycle lifts", c, t0, 0);
}

CriterionResult criterion_semisimple_tables() {
    auto t0 = Clock::now();
    Checks c;
    auto rep = verify_ss_tables(0, 1);
    c.expect(rep.ok(), std::to_string(rep.failures.size()) + " row failures, first: " +
                           (rep.failures.empty() ? std::string() : rep.failures.front()));

    SSCase bad = ss_case(10);
    bad.blocks[0].rows[0] = "l1*(1,1,0,0)";
    c.expect(!verify_ss_case(bad).ok(), "negative control passed");

    int total = 0, good = 0;
    std::vector<std::string> misses;
    for (int i = 1; i <= 10; ++i)
        for (const auto& b : ss_case(i).blocks) {
            auto lam = sample_parameters(i, b.j, 1)[0];
            for (int k = 1; k <= b.row_count(); ++k) {
                ++total;
                std::string tg = "(" + std::to_string(i) + "," + std::to_string(b.j) + "," + std::to_string(k) + ")";
                try {
                    auto l = classify_semisimple(table_row(i, b.j, k, lam));
                    if (l.i == i && l.j == b.j && l.k == k)
                        ++good;
                    else
                        misses.push_back(tg + "->(" + std::to_string(l.i) + "," + std::to_string(l.j) + "," +
                                         std::to_string(l.k) + ")");
                } catch (const std::exception& e) {
                    misses.push_back(tg + " threw");
                }
            }
        }
    std::string rt = "round trip " + std::to_string(good) + "/" + std::to_string(total);
    if (!misses.empty()) rt += " (" + misses.front() + " ...)";
    c.expect(good == total, rt);
    return finish(5, "semisimple tables", c, t0, 0, std::to_string(rep.rows) + " rows");
}

CriterionResult criterion_mixed_tables() {
    auto t0 = Clock::now();
    Checks c;
    auto rep = verify_mixed_tables(0);
    for (const auto& f : rep.failures) c.expect(false, f);
    auto nil = verify_nilpotent_elements();
    for (const auto& f : nil.failures) c.expect(false, f);
    c.expect(true, "mixed rows");
    return finish(6, "mixed tables", c, t0, 0,
                  std::to_string(rep.rows) + " mixed rows, " + std::to_string(nil.rows) + " nilpotent entries");
}

CriterionResult criterion_jordan(std::uint64_t seed, int count) {
    auto t0 = Clock::now();
    Checks c;
    std::mt19937_64 rng(seed);
    int mixed = 0;
    for (int k = 0; k < count; ++k) {
        Tensor t = random_tensor(rng, k % 2 == 1);
        LieElt x = from_tensor(t);
        auto [s, n] = jordan_decompose(x);
        std::string tg = "#" + std::to_string(k) + " " + t.pretty();
        c.expect(s + n == x, tg + ": s+n != x");
        c.expect(lie_is_zero(bracket(s, n)), tg + ": [s,n] != 0");
        Matrix as = ad_matrix(s);
        c.expect(squarefree_part(charpoly(as)).eval(as).is_zero(), tg + ": ad s not semisimple");
        Matrix an = ad_matrix(n), p = an;
        for (int e = 1; e < kDim && !p.is_zero(); ++e) p = p * an;
        c.expect(p.is_zero(), tg + ": ad n not nilpotent");
        if (!lie_is_zero(n) && !lie_is_zero(s)) ++mixed;
    }
    return finish(7, "Jordan decomposition", c, t0, 0,
                  std::to_string(count) + " elements, " + std::to_string(mixed) + " mixed");
}

CriterionResult criterion_invariants(std::uint64_t seed) {
    auto t0 = Clock::now();
    Checks c;
    c.expect(quadratic_solution_dim() == 1, "quadratic solution space dim " + std::to_string(quadratic_solution_dim()));
    std::mt19937_64 rng(seed);
    Tensor t = random_tensor(rng, false);
    auto iv = invariants_of(t);
    for (int k = 0; k < 50; ++k) {
        GElt g = random_real_element(rng);
        c.expect(g.in_sl2() && g.conj() == g, "sampled element not real unimodular");
        c.expect(invariants_of(act(g, t)) == iv, "not invariant under " + g.pretty());
    }
    // homogeneity: H has degree 2, the flattening determinants degree 4
    CycNum a(3, 2);
    auto sv = invariants_of(t.scaled(a));
    CycNum a2 = a * a, a4 = a2 * a2;
    c.expect(sv.H == iv.H * a2, "H is not of degree 2");
    c.expect(sv.L12 == iv.L12 * a4 && sv.L13 == iv.L13 * a4 && sv.L14 == iv.L14 * a4,
             "flattening determinants are not of degree 4");
    // two 3-qubit states: 2*8 coordinates, generic orbit of dimension 9, so 7 invariants
    auto cnt = two_center_count();
    c.expect(cnt.copies_dim == 16 && cnt.orbit_dim == 9 && cnt.invariants == 7,
             "counting identity " + std::to_string(cnt.copies_dim) + "-" + std::to_string(cnt.orbit_dim));
    return finish(8, "invariants", c, t0, 0);
}

CriterionResult criterion_mu() {
    auto t0 = Clock::now();
    Checks c;
    int cases = 0;
    for (int i = 2; i <= 10; ++i) {
        const auto& sc = ss_case(i);
        for (const auto& b : sc.blocks) {
            if (b.j == 1) continue;
            ++cases;
            std::string tg = "(" + std::to_string(i) + "," + std::to_string(b.j) + ")";
            Tensor p = h_elt(family_point(i, sample_parameters(i, b.j)[0]));
            try {
                auto ms = u_p_mu_fixed(p, block_n(sc, b));
                c.expect(ms.real_dim == ms.complex_dim, tg + ": dim_R " + std::to_string(ms.real_dim) + " vs dim_C " +
                                                            std::to_string(ms.complex_dim));
            } catch (const MathError& e) {
                c.expect(false, tg + ": " + e.what());
            }
        }
    }

    // case (2,3): e = n_{2,1} is not mu-fixed, x = i e is, and a torus element of Z(q) maps e to x
    {
        const auto& sc = ss_case(2);
        const auto& b = ss_block(2, 3);
        GElt n = block_n(sc, b);
        Tensor p = h_elt(family_point(2, sample_parameters(2, 3)[0]));
        Tensor e = nilpotent_n(2, 1);
        Tensor x = e.scaled(CycNum::i());
        c.expect(mu_apply(n, e) != e, "(2,3): e is mu-fixed");
        c.expect(mu_apply(n, x) == x, "(2,3): i e is not mu-fixed");
        GElt printed = GElt::parse_names("(D(i),D(i),D(-i),D(-i))");
        c.expect(act(printed, p) == p, "(2,3): printed conjugator does not fix p");
        c.expect(act(printed, e) == x, "(2,3): printed conjugator fixes e instead of mapping it to i e");
        GElt g3 = GElt::parse_names("(-I,-M,-J,-MJ)");
        c.expect(coboundary(g3) == n, "(2,3): g^-1 conj(g) != n");
        c.expect(act(g3, x) == Tensor::basis("0000"), "(2,3): g x != e0000");
        auto nj = nilpotent_nj(2, 3, 1);
        c.expect(nj && *nj == Tensor::basis("0000"), "(2,3): n_{2,3,1} != e0000");
        auto rn = find_real_nilpotent(2, family_point(2, sample_parameters(2, 3)[0]), n, e);
        c.expect(rn.status == RealNilpotent::Status::Found, "(2,3): search found no real point");
    }

    // case (4,4): n_{4,1} has no real point, n_{4,2} does
    {
        const auto& sc = ss_case(4);
        const auto& b = ss_block(4, 4);
        HVec q = family_point(4, sample_parameters(4, 4)[0]);
        GElt n = block_n(sc, b);
        auto r1 = find_real_nilpotent(4, q, n, nilpotent_n(4, 1));
        c.expect(r1.status == RealNilpotent::Status::NoRealPoint, "(4,4): n_{4,1} not refuted: " + r1.detail);
        auto r2 = find_real_nilpotent(4, q, n, nilpotent_n(4, 2));
        c.expect(r2.status == RealNilpotent::Status::Found, "(4,4): n_{4,2} has no real point");
    }
    return finish(9, "mu-twist", c, t0, 0, std::to_string(cases) + " twisted cases");
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt) {
    std::vector<std::function<CriterionResult()>> all = {
        criterion_structure,
        criterion_restricted,
        criterion_cohomology,
        criterion_lifts,
        criterion_semisimple_tables,
        criterion_mixed_tables,
        [&] { return criterion_jordan(opt.seed); },
        [&] { return criterion_invariants(opt.seed); },
        criterion_mu,
    };
    std::vector<CriterionResult> out;
    for (int id = 1; id <= static_cast<int>(all.size()); ++id) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        CriterionResult r;
        auto t0 = Clock::now();
        try {
            r = all[id - 1]();
        } catch (const std::exception& e) {
            r.id = id;
            r.name = "criterion " + std::to_string(id);
            r.detail = std::string("exception: ") + e.what();
            r.seconds = since(t0);
        }
        if (opt.on_result) opt.on_result(r);
        out.push_back(r);
    }
    return out;
}

}  // namespace rebit
