#include "rebit/cartan.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace rebit {

namespace {

std::string mat_key(const Matrix& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j).str() + ";";
    return s;
}

Matrix diag4(int a, int b, int c, int d) {
    Matrix m(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

Matrix rows4(std::initializer_list<std::array<int, 4>> rows) {
    Matrix m(4, 4);
    int i = 0;
    for (const auto& r : rows) {
        for (int j = 0; j < 4; ++j) m(i, j) = r[j];
        ++i;
    }
    return m;
}

template <class T, class Key, class Mul>
std::vector<T> closure(const std::vector<T>& gens, const T& one, Key key, Mul mul) {
    std::vector<T> elts{one};
    std::unordered_map<std::string, int> seen{{key(one), 0}};
    for (std::size_t k = 0; k < elts.size(); ++k)
        for (const auto& g : gens) {
            T x = mul(elts[k], g);
            auto kx = key(x);
            if (seen.count(kx)) continue;
            seen.emplace(kx, static_cast<int>(elts.size()));
            elts.push_back(std::move(x));
        }
    return elts;
}


// sqrt of a rational in Q(eta), when it has the form r * {1, sqrt2} (times i if negative).
std::optional<CycNum> rational_sqrt(const mpq_class& q) {
    if (sgn(q) == 0) return CycNum(0);
    mpq_class a = abs(q);
    mpz_class n = a.get_num() * a.get_den();
    for (int k : {1, 2}) {
        if (n % k != 0) continue;
        mpz_class m = n / k;
        mpz_class r = sqrt(m);
        if (r * r != m) continue;
        mpq_class rq(r, a.get_den());
        rq.canonicalize();
        CycNum s(rq);
        if (k == 2) s *= CycNum::sqrt2();
        if (sgn(q) < 0) s *= CycNum::i();
        return s;
    }
    return std::nullopt;
}

// exp(pi/2 * Z) for Z in sl(2) with Z^2 = -m^2 I, m a half-integer.
std::optional<Mat2> quarter_turn(const Mat2& z) {
    CycNum delta = z.a * z.a + z.b * z.c;
    if (!delta.is_rational() || sgn(delta[0]) > 0) return std::nullopt;
    auto m = rational_sqrt(-delta[0]);
    if (!m || !m->is_rational()) return std::nullopt;
    mpq_class mm = (*m)[0];
    if (sgn(mm) == 0) {
        if (!z.is_zero()) return std::nullopt;
        return Mat2::identity();
    }
    mpq_class twice = 2 * mm;
    if (twice.get_den() != 1) return std::nullopt;
    long n = twice.get_num().get_si() % 8;
    // cos(n pi/4), sin(n pi/4)
    static const int cs[8][2] = {{2, 0}, {1, 1}, {0, 2}, {-1, 1}, {-2, 0}, {-1, -1}, {0, -2}, {1, -1}};
    auto val = [](int v) {
        if (v == 2) return CycNum(1);
        if (v == -2) return CycNum(-1);
        if (v == 0) return CycNum(0);
        CycNum h = CycNum::sqrt2() * CycNum(1, 2);
        return v > 0 ? h : -h;
    };
    CycNum c = val(cs[n][0]), s = val(cs[n][1]) * CycNum(mpq_class(1) / mm);
    return Mat2{c + s * z.a, s * z.b, s * z.c, c - s * z.a};
}

}  // namespace

Tensor h_elt(const HVec& lam) {
    static const char* idx[4][2] = {{"0000", "1111"}, {"0110", "1001"}, {"0101", "1010"}, {"0011", "1100"}};
    Tensor x;
    for (int k = 0; k < 4; ++k) {
        x.t[Tensor::index(idx[k][0])] += lam[k];
        x.t[Tensor::index(idx[k][1])] += lam[k];
    }
    return x;
}

std::optional<HVec> h_coords(const Tensor& x) {
    static const int first[4] = {0, 6, 5, 3};
    HVec lam;
    for (int k = 0; k < 4; ++k) lam[k] = x.t[first[k]];
    if (h_elt(lam) != x) return std::nullopt;
    return lam;
}

HVec apply(const Matrix& w, const HVec& v) {
    HVec r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!w(i, j).is_zero() && !v[j].is_zero()) r[i] += w(i, j) * v[j];
    return r;
}

CycNum root_value(const RestrictedRoot& r, const HVec& p) {
    CycNum s;
    for (int k = 0; k < 4; ++k)
        if (!p[k].is_zero() && !r.values[k].is_zero()) s += r.values[k] * p[k];
    return s;
}

std::optional<Matrix> weyl_of(const GElt& g) {
    Matrix m(4, 4);
    for (int j = 0; j < 4; ++j) {
        HVec e;
        e[j] = 1;
        auto c = h_coords(act(g, h_elt(e)));
        if (!c) return std::nullopt;
        for (int i = 0; i < 4; ++i) m(i, j) = (*c)[i];
    }
    return m;
}

const CartanData& CartanData::get() {
    static const CartanData instance;
    return instance;
}

int CartanData::weyl_index(const Matrix& w) const {
    auto it = weyl_key_.find(mat_key(w));
    return it == weyl_key_.end() ? -1 : it->second;
}

CartanData::CartanData() {
    for (int k = 0; k < 4; ++k) {
        HVec e;
        e[k] = 1;
        u[k] = h_elt(e);
    }

    // Simultaneous eigenspaces of ad(u_k) on g.
    std::array<Matrix, 4> ad;
    for (int k = 0; k < 4; ++k) ad[k] = ad_matrix(from_tensor(u[k]));
    struct Space {
        std::vector<Vec> basis;
        HVec values;
    };
    std::vector<Space> spaces(1);
    for (int a = 0; a < kDim; ++a) {
        Vec e(kDim);
        e[a] = 1;
        spaces[0].basis.push_back(e);
    }
    for (int k = 0; k < 4; ++k) {
        std::vector<Space> next;
        for (const auto& sp : spaces)
            for (int cand = -2; cand <= 2; ++cand) {
                int d = static_cast<int>(sp.basis.size());
                Matrix m(kDim, d);
                for (int j = 0; j < d; ++j) {
                    Vec col = ad[k] * sp.basis[j];
                    for (int i = 0; i < kDim; ++i) m(i, j) = col[i] - CycNum(cand) * sp.basis[j][i];
                }
                auto ker = m.kernel();
                if (ker.empty()) continue;
                Space ns;
                ns.values = sp.values;
                ns.values[k] = cand;
                for (const auto& c : ker) {
                    Vec v(kDim);
                    for (int j = 0; j < d; ++j)
                        if (!c[j].is_zero())
                            for (int i = 0; i < kDim; ++i) v[i] += c[j] * sp.basis[j][i];
                    ns.basis.push_back(v);
                }
                next.push_back(std::move(ns));
            }
        spaces = std::move(next);
    }
    int total = 0;
    for (const auto& sp : spaces) total += static_cast<int>(sp.basis.size());
    if (total != kDim) throw std::logic_error("restricted root decomposition incomplete");

    auto theta = [](const LieElt& x) {
        Graded g = to_graded(x);
        g.x1 = -g.x1;
        return from_graded(g);
    };

    for (const auto& sp : spaces) {
        bool zero = true;
        for (const auto& v : sp.values) zero &= v.is_zero();
        if (zero) continue;
        if (sp.basis.size() != 1) throw std::logic_error("restricted root space not one-dimensional");
        RestrictedRoot r;
        r.values = sp.values;
        for (int a = 0; a < kDim; ++a) r.vec[a] = sp.basis[0][a];
        Graded hg = to_graded(bracket(r.vec, theta(r.vec)));
        auto hc = h_coords(hg.x1);
        if (!hg.x0.is_zero() || !hc) throw std::logic_error("root bracket not in h");
        CycNum ah = root_value(r, *hc);
        for (int k = 0; k < 4; ++k) r.coroot[k] = (*hc)[k] * CycNum(2) / ah;
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const RestrictedRoot& a, const RestrictedRoot& b) {
        for (int k = 0; k < 4; ++k) {
            int c = CycNum::compare(b.values[k], a.values[k]);
            if (c) return c < 0;
        }
        return false;
    });

    // Weyl group from reflections.
    std::vector<Matrix> refl;
    for (const auto& r : roots) {
        Matrix s = Matrix::identity(4);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) s(i, j) -= r.values[j] * r.coroot[i];
        refl.push_back(s);
    }
    weyl = closure<Matrix>(refl, Matrix::identity(4), mat_key, [](const Matrix& a, const Matrix& b) { return a * b; });

    // Centralizer of h.
    std::vector<GElt> zgens = {GElt::parse_names("(J,J,J,J)"), GElt::parse_names("(-I,-I,I,I)"),
                               GElt::parse_names("(-I,I,-I,I)"), GElt::parse_names("(K,K,K,K)")};
    center = generate_group(zgens);

    // Lifts of reflections: exp(pi/2 ad(E - F)) with E, F spanning the root sl(2).
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const auto& r = roots[k];
        LieElt y = theta(r.vec);
        auto hc = *h_coords(to_graded(bracket(r.vec, y)).x1);
        // [X, Y] = c h_alpha
        CycNum c = hc[0].is_zero() ? (hc[1].is_zero() ? (hc[2].is_zero() ? hc[3] / r.coroot[3] : hc[2] / r.coroot[2])
                                                        : hc[1] / r.coroot[1])
                                   : hc[0] / r.coroot[0];
        if (!c.is_rational()) throw std::logic_error("non-rational root normalisation");
        auto s = rational_sqrt(-1 / c[0]);
        if (!s) throw std::logic_error("no square root for root normalisation");
        G0Elt z = to_graded(scaled(r.vec + y, *s)).x0;
        GElt g;
        for (int slot = 0; slot < 4; ++slot) {
            auto e = quarter_turn(z.x[slot]);
            if (!e) throw std::logic_error("reflection lift not exact");
            g.f[slot] = *e;
        }
        auto w = weyl_of(g);
        if (!w || !(*w == refl[k])) throw std::logic_error("reflection lift does not induce the reflection");
        reflection_lifts.push_back(g);
    }

    // N(h) = (one lift per Weyl element) * Z(h); lifts found by a search over W.
    for (std::size_t k = 0; k < weyl.size(); ++k) weyl_key_[mat_key(weyl[k])] = static_cast<int>(k);
    const auto& widx = weyl_key_;
    std::vector<GElt> wlift(weyl.size());
    std::vector<int> have(weyl.size(), 0), queue{0};
    wlift[0] = GElt::identity();
    have[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int w = queue[q];
        for (std::size_t k = 0; k < refl.size(); ++k) {
            int v = widx.at(mat_key(weyl[w] * refl[k]));
            if (have[v]) continue;
            have[v] = 1;
            wlift[v] = wlift[w] * reflection_lifts[k];
            queue.push_back(v);
        }
    }
    if (queue.size() != weyl.size()) throw std::logic_error("normalizer construction inconsistent");
    lift_.assign(weyl.size(), -1);
    for (std::size_t w = 0; w < weyl.size(); ++w) {
        lift_[w] = static_cast<int>(normalizer.size());
        for (const auto& z : center) {
            normalizer.push_back(wlift[w] * z);
            normalizer_weyl.push_back(static_cast<int>(w));
        }
    }
    // Subsystems.
    auto fam = [](std::initializer_list<std::array<int, 4>> cols) {
        Matrix m(4, static_cast<int>(cols.size()));
        int j = 0;
        for (const auto& c : cols) {
            for (int i = 0; i < 4; ++i) m(i, j) = c[i];
            ++j;
        }
        return m;
    };
    std::vector<Matrix> pm = {diag4(-1, -1, -1, -1)};
    std::vector<Matrix> two;
    for (auto d : std::vector<std::array<int, 4>>{
             {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}})
        two.push_back(diag4(d[0], d[1], d[2], d[3]));
    struct Def {
        std::string type;
        Matrix family;
        std::vector<Matrix> gens;
        std::string z;
    };
    std::vector<Def> defs = {
        {"empty", fam({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), refl, "0"},
        {"A1", fam({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}), two, "sl2"},
        {"A2", fam({{1, -1, 0, 0}, {1, 0, -1, 0}}), pm, "sl3"},
        {"2A1", fam({{1, 0, 0, 0}, {0, 0, 0, 1}}),
         {diag4(1, 1, 1, -1), rows4({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})}, "sl2+sl2"},
        {"2A1", fam({{1, 0, 0, 0}, {0, 0, 1, 0}}),
         {diag4(1, 1, -1, 1), rows4({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}})}, "sl2+sl2"},
        {"2A1", fam({{1, 0, 0, 0}, {0, 1, 0, 0}}),
         {diag4(-1, 1, 1, 1), rows4({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}})}, "sl2+sl2"},
        {"A3", fam({{1, 0, 0, -1}}), pm, "sl4"},
        {"A3", fam({{1, 0, -1, 0}}), pm, "sl4"},
        {"A3", fam({{1, -1, 0, 0}}), pm, "sl4"},
        {"3A1", fam({{1, 0, 0, 0}}), pm, "sl2+sl2+sl2"},
        {"D4", Matrix(4, 0), {}, "so8"},
    };
    static const int generic[4] = {2, 5, 13, 37};
    for (std::size_t k = 0; k < defs.size(); ++k) {
        Subsystem s;
        s.i = static_cast<int>(k) + 1;
        s.type = defs[k].type;
        s.family = defs[k].family;
        s.gamma_gens = defs[k].gens;
        s.centralizer_type = defs[k].z;
        HVec p;
        for (int j = 0; j < s.family.cols(); ++j)
            for (int i = 0; i < 4; ++i) p[i] += s.family(i, j) * CycNum(generic[j]);
        for (std::size_t r = 0; r < roots.size(); ++r)
            if (root_value(roots[r], p).is_zero()) s.roots.push_back(static_cast<int>(r));
        s.gamma = closure<Matrix>(s.gamma_gens, Matrix::identity(4), mat_key,
                                  [](const Matrix& a, const Matrix& b) { return a * b; });
        subsystems.push_back(std::move(s));
    }
}

std::vector<int> vanishing_roots(const HVec& p) {
    const auto& cd = CartanData::get();
    std::vector<int> out;
    for (std::size_t r = 0; r < cd.roots.size(); ++r)
        if (root_value(cd.roots[r], p).is_zero()) out.push_back(static_cast<int>(r));
    return out;
}

Membership component_membership(const HVec& p) {
    const auto& cd = CartanData::get();
    for (std::size_t w = 0; w < cd.weyl.size(); ++w) {
        HVec img = apply(cd.weyl[w], p);
        auto van = vanishing_roots(img);
        for (const auto& s : cd.subsystems) {
            if (s.roots != van) continue;
            Vec b(img.begin(), img.end());
            auto lam = s.family.solve(b);
            if (!lam) continue;
            return {s.i, static_cast<int>(w), img, *lam};
        }
    }
    throw MathError("no subsystem matches");
}

const std::vector<CartanSpace>& cartan_spaces() {
    static const std::vector<CartanSpace> spaces = [] {
        struct Def {
            char name;
            const char* witness;
            std::array<int, 4> signs;
        };
        std::vector<Def> defs = {
            {'u', "(I,I,I,I)", {1, 1, 1, 1}},
            {'v', "(L,I,I,I)", {-1, -1, -1, -1}},
            {'w', "(D(eta^5),D(eta^5),-D(eta^3),-D(eta^7))", {-1, -1, -1, 1}},
            {'x', "(M,I,I,M)", {-1, -1, 1, 1}},
            {'y', "(I,M,I,M)", {-1, 1, -1, 1}},
            {'z', "(I,I,M,M)", {-1, 1, 1, -1}},
            {'t', "(D(eta^5),D(eta^5),D(eta^5),D(eta^5))", {-1, 1, 1, 1}},
        };
        static const char* idx[4][2] = {{"0000", "1111"}, {"0110", "1001"}, {"0101", "1010"}, {"0011", "1100"}};
        std::vector<CartanSpace> out;
        int m = 1;
        for (const auto& d : defs) {
            CartanSpace c;
            c.m = m++;
            c.name = d.name;
            c.witness = GElt::parse_names(d.witness);
            for (int k = 0; k < 4; ++k)
                c.basis[k] = Tensor::basis(idx[k][0]) + Tensor::basis(idx[k][1]).scaled(CycNum(d.signs[k]));
            out.push_back(c);
        }
        return out;
    }();
    return spaces;
}

std::optional<HVec> cartan_coords(int m, const Tensor& x) {
    const auto& c = cartan_spaces().at(m - 1);
    static const int first[4] = {0, 6, 5, 3};
    HVec lam;
    for (int k = 0; k < 4; ++k) lam[k] = x.t[first[k]];
    Tensor y;
    for (int k = 0; k < 4; ++k) y = y + c.basis[k].scaled(lam[k]);
    if (y != x) return std::nullopt;
    return lam;
}

std::optional<int> cartan_detect(const Tensor& x) {
    for (int m = 1; m <= 7; ++m)
        if (cartan_coords(m, x)) return m;
    return std::nullopt;
}

const std::array<int, 4>& perm_23() {
    static const std::array<int, 4> p = {0, 2, 1, 3};
    return p;
}

const std::array<int, 4>& perm_24() {
    static const std::array<int, 4> p = {0, 3, 2, 1};
    return p;
}

}  // namespace rebit
