#include "rebit/lie.hpp"

#include <algorithm>
#include <map>

namespace rebit {

namespace {

using IMat = std::array<std::array<int, 8>, 8>;

const std::array<std::array<int, 4>, 4> kSimpleEps = {{
    {1, -1, 0, 0},
    {0, 1, -1, 0},
    {0, 0, 1, -1},
    {0, 0, 1, 1},
}};

std::array<int, 4> simple_from_eps(const std::array<int, 4>& e) {
    int s = e[0] + e[1] + e[2];
    return {e[0], e[0] + e[1], (s - e[3]) / 2, (s + e[3]) / 2};
}

IMat root_matrix(const std::array<int, 4>& e) {
    IMat m{};
    std::vector<int> pos, neg;
    for (int k = 0; k < 4; ++k) {
        if (e[k] == 1) pos.push_back(k);
        if (e[k] == -1) neg.push_back(k);
    }
    if (pos.size() == 1 && neg.size() == 1) {
        int i = pos[0], j = neg[0];
        m[i][j] = 1;
        m[4 + j][4 + i] = -1;
    } else if (pos.size() == 2) {
        int i = pos[0], j = pos[1];
        m[i][4 + j] = 1;
        m[j][4 + i] = -1;
    } else {
        int i = neg[0], j = neg[1];
        m[4 + j][i] = 1;
        m[4 + i][j] = -1;
    }
    return m;
}

IMat commutator(const IMat& a, const IMat& b) {
    IMat r{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k] == 0 && b[i][k] == 0) continue;
            for (int j = 0; j < 8; ++j) r[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
        }
    return r;
}

}  // namespace

namespace {
LieElt bracket_in(const D4& g, const LieElt& x, const LieElt& y);
Graded to_graded_in(const D4& g, const LieElt& x);
}  // namespace

const D4& D4::get() {
    static const D4 instance;
    return instance;
}

D4::D4() {
    std::vector<Root> pos;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::array<int, 4> e{};
                    e[i] = si;
                    e[j] = sj;
                    auto s = simple_from_eps(e);
                    if (s[0] >= 0 && s[1] >= 0 && s[2] >= 0 && s[3] >= 0) pos.push_back({s, e});
                }
    std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.simple < b.simple;
    });
    roots_ = pos;
    for (const auto& r : pos) {
        Root n = r;
        for (int k = 0; k < 4; ++k) {
            n.simple[k] = -n.simple[k];
            n.eps[k] = -n.eps[k];
        }
        roots_.push_back(n);
    }

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int ip = 0;
            for (int k = 0; k < 4; ++k) ip += kSimpleEps[i][k] * kSimpleEps[j][k];
            cartan_[i][j] = ip;
        }

    rep_.resize(kDim);
    for (int i = 0; i < 4; ++i) {
        IMat m{};
        for (int k = 0; k < 4; ++k) {
            m[k][k] = kSimpleEps[i][k];
            m[4 + k][4 + k] = -kSimpleEps[i][k];
        }
        rep_[i] = m;
        degree_[i] = 0;
    }
    for (int r = 0; r < 24; ++r) {
        rep_[4 + r] = root_matrix(roots_[r].eps);
        degree_[4 + r] = ((roots_[r].simple[1] % 2) + 2) % 2;
        for (int p = 0; p < 8; ++p)
            for (int q = 0; q < 8; ++q)
                if (rep_[4 + r][p][q] != 0 && pos_[4 + r] == std::array<int, 2>{0, 0}) pos_[4 + r] = {p, q};
    }

    auto decompose = [&](const IMat& m) {
        std::vector<Term> out;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) t[k] = m[k][k];
        int s = t[0] + t[1] + t[2];
        std::array<int, 4> c = {t[0], t[0] + t[1], (s - t[3]) / 2, (s + t[3]) / 2};
        for (int i = 0; i < 4; ++i)
            if (c[i]) out.push_back({i, c[i]});
        for (int a = 4; a < kDim; ++a) {
            auto [p, q] = pos_[a];
            if (m[p][q]) out.push_back({a, static_cast<long>(m[p][q] * rep_[a][p][q])});
        }
        return out;
    };

    sc_.assign(kDim, std::vector<std::vector<Term>>(kDim));
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) sc_[a][b] = decompose(commutator(rep_[a], rep_[b]));

    // Slots: beta = -gamma_0, gamma_1, gamma_3, gamma_4.
    std::array<std::array<int, 4>, 4> beta = {{{-1, -2, -1, -1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    for (int k = 0; k < 4; ++k) slot_root_[k] = root_basis_index(beta[k]);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) {
            int w = 0;
            for (int j = 0; j < 4; ++j) w += beta[k][j] * cartan_[j][i];
            h_weight[i][k] = w;
            H_to_h[k][i] = beta[k][i];
        }

    // Tensor identification: e_I = prod_k (ad F_k)^{i_k} x_{-gamma_2}.
    int low = root_basis_index({0, -1, 0, 0});
    t_index_.fill(-1);
    t_sign_.fill(0);
    for (int idx = 0; idx < 16; ++idx) {
        LieElt v = lie_basis(low);
        for (int k = 0; k < 4; ++k)
            if ((idx >> (3 - k)) & 1) {
                int f = root_basis_index({-beta[k][0], -beta[k][1], -beta[k][2], -beta[k][3]});
                v = bracket_in(*this, lie_basis(f), v);
            }
        int found = -1, sign = 0;
        for (int a = 0; a < kDim; ++a) {
            if (v[a].is_zero()) continue;
            if (found >= 0) throw std::logic_error("tensor identification is not monomial");
            found = a;
            sign = v[a] == CycNum(1) ? 1 : (v[a] == CycNum(-1) ? -1 : 0);
        }
        if (found < 0 || sign == 0) throw std::logic_error("tensor identification failed");
        t_index_[found] = idx;
        t_sign_[found] = sign;
        t_basis_[idx] = found;
    }

    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            LieElt b = bracket_in(*this, lie_basis(t_basis_[i]), lie_basis(t_basis_[j]));
            b = scaled(b, CycNum(t_sign_[t_basis_[i]] * t_sign_[t_basis_[j]]));
            tb_[i][j] = to_graded_in(*this, b).x0;
        }
}

int D4::root_basis_index(const std::array<int, 4>& simple) const {
    for (int r = 0; r < 24; ++r)
        if (roots_[r].simple == simple) return 4 + r;
    return -1;
}

std::string D4::label(int a) const {
    if (a < 4) return "h" + std::to_string(a + 1);
    const auto& s = roots_[a - 4].simple;
    std::string out = "x(";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ",";
        out += std::to_string(s[k]);
    }
    return out + ")";
}

LieElt lie_zero() { return LieElt{}; }

LieElt lie_basis(int a) {
    LieElt x{};
    x[a] = 1;
    return x;
}

LieElt operator+(const LieElt& a, const LieElt& b) {
    LieElt r = a;
    for (int k = 0; k < kDim; ++k) r[k] += b[k];
    return r;
}

LieElt operator-(const LieElt& a, const LieElt& b) {
    LieElt r = a;
    for (int k = 0; k < kDim; ++k) r[k] -= b[k];
    return r;
}

LieElt scaled(const LieElt& a, const CycNum& s) {
    LieElt r{};
    for (int k = 0; k < kDim; ++k)
        if (!a[k].is_zero()) r[k] = a[k] * s;
    return r;
}

bool lie_is_zero(const LieElt& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

namespace {
LieElt bracket_in(const D4& g, const LieElt& x, const LieElt& y) {
    LieElt r{};
    for (int a = 0; a < kDim; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < kDim; ++b) {
            if (y[b].is_zero()) continue;
            const auto& terms = g.sc(a, b);
            if (terms.empty()) continue;
            CycNum p = x[a] * y[b];
            for (const auto& t : terms) r[t.index] += p * CycNum(t.coeff);
        }
    }
    return r;
}

Graded to_graded_in(const D4& g, const LieElt& x) {
    Graded out;
    for (int a = 4; a < kDim; ++a)
        if (g.degree(a) == 1 && !x[a].is_zero()) {
            int idx = g.tensor_index(a);
            out.x1.t[idx] = g.tensor_sign(a) == 1 ? x[a] : -x[a];
        }
    for (int k = 0; k < 4; ++k) {
        int e = g.slot_roots()[k];
        int f = g.root_basis_index({-g.roots()[e - 4].simple[0], -g.roots()[e - 4].simple[1],
                                    -g.roots()[e - 4].simple[2], -g.roots()[e - 4].simple[3]});
        CycNum h;
        for (int i = 0; i < 4; ++i)
            if (!x[i].is_zero() && g.h_weight[i][k]) h += x[i] * CycNum(g.h_weight[i][k], 2);
        out.x0.x[k] = {h, x[e], x[f], -h};
    }
    return out;
}
}  // namespace

LieElt bracket(const LieElt& x, const LieElt& y) { return bracket_in(D4::get(), x, y); }
Graded to_graded(const LieElt& x) { return to_graded_in(D4::get(), x); }

LieElt from_graded(const Graded& gr) {
    const D4& g = D4::get();
    LieElt x{};
    for (int idx = 0; idx < 16; ++idx) {
        if (gr.x1.t[idx].is_zero()) continue;
        int a = g.basis_of_tensor(idx);
        x[a] = g.tensor_sign(a) == 1 ? gr.x1.t[idx] : -gr.x1.t[idx];
    }
    for (int k = 0; k < 4; ++k) {
        const Mat2& m = gr.x0.x[k];
        int e = g.slot_roots()[k];
        const auto& s = g.roots()[e - 4].simple;
        int f = g.root_basis_index({-s[0], -s[1], -s[2], -s[3]});
        x[e] += m.b;
        x[f] += m.c;
        if (!m.a.is_zero())
            for (int i = 0; i < 4; ++i)
                if (g.H_to_h[k][i]) x[i] += m.a * CycNum(g.H_to_h[k][i]);
    }
    return x;
}

LieElt from_tensor(const Tensor& t) { return from_graded({G0Elt{}, t}); }
LieElt from_g0(const G0Elt& x) { return from_graded({x, Tensor{}}); }

G0Elt bracket(const Tensor& x, const Tensor& y) {
    const D4& g = D4::get();
    std::array<CycNum, 12> acc;
    for (int i = 0; i < 16; ++i) {
        if (x.t[i].is_zero()) continue;
        for (int j = 0; j < 16; ++j) {
            if (y.t[j].is_zero()) continue;
            const G0Elt& b = g.tensor_bracket(i, j);
            if (b.is_zero()) continue;
            CycNum p = x.t[i] * y.t[j];
            auto c = b.coords();
            for (int k = 0; k < 12; ++k)
                if (!c[k].is_zero()) acc[k] += p * c[k];
        }
    }
    return G0Elt::from_coords(acc);
}

Graded bracket(const Graded& x, const Graded& y) {
    Graded r;
    r.x0 = bracket(x.x0, y.x0) + bracket(x.x1, y.x1);
    r.x1 = act(x.x0, y.x1) - act(y.x0, x.x1);
    return r;
}

Matrix to_matrix(const LieElt& x) {
    const D4& g = D4::get();
    Matrix m(8, 8);
    for (int a = 0; a < kDim; ++a) {
        if (x[a].is_zero()) continue;
        const auto& r = g.rep(a);
        for (int p = 0; p < 8; ++p)
            for (int q = 0; q < 8; ++q)
                if (r[p][q]) m(p, q) += x[a] * CycNum(r[p][q]);
    }
    return m;
}

LieElt from_matrix(const Matrix& m) {
    const D4& g = D4::get();
    LieElt x{};
    std::array<CycNum, 4> t;
    for (int k = 0; k < 4; ++k) t[k] = m(k, k);
    CycNum s = t[0] + t[1] + t[2];
    x[0] = t[0];
    x[1] = t[0] + t[1];
    x[2] = (s - t[3]) * CycNum(1, 2);
    x[3] = (s + t[3]) * CycNum(1, 2);
    for (int a = 4; a < kDim; ++a) {
        auto [p, q] = g.position(a);
        if (!m(p, q).is_zero()) x[a] = g.rep(a)[p][q] == 1 ? m(p, q) : -m(p, q);
    }
    if (!(to_matrix(x) == m)) throw MathError("matrix is not in so(8)");
    return x;
}

Matrix ad_matrix(const LieElt& x) {
    Matrix m(kDim, kDim);
    for (int b = 0; b < kDim; ++b) {
        LieElt c = bracket(x, lie_basis(b));
        for (int a = 0; a < kDim; ++a) m(a, b) = c[a];
    }
    return m;
}

std::vector<std::string> check_structure() {
    const D4& g = D4::get();
    std::vector<std::string> fails;
    // Jacobi on basis triples.
    for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b)
            for (int c = b + 1; c < kDim; ++c) {
                LieElt ea = lie_basis(a), eb = lie_basis(b), ec = lie_basis(c);
                LieElt j = bracket(ea, bracket(eb, ec)) + bracket(eb, bracket(ec, ea)) + bracket(ec, bracket(ea, eb));
                if (!lie_is_zero(j))
                    fails.push_back("Jacobi fails on " + g.label(a) + "," + g.label(b) + "," + g.label(c));
            }
    // Chevalley relations.
    for (int r = 0; r < 24; ++r) {
        int a = 4 + r;
        const auto& s = g.roots()[r].simple;
        int na = g.root_basis_index({-s[0], -s[1], -s[2], -s[3]});
        LieElt h = bracket(lie_basis(a), lie_basis(na));
        for (int i = 0; i < 4; ++i)
            if (h[i] != CycNum(s[i])) fails.push_back("[x,x-] is not the coroot for " + g.label(a));
        for (int i = 0; i < 4; ++i) {
            int w = 0;
            for (int j = 0; j < 4; ++j) w += s[j] * g.cartan(j, i);
            LieElt v = bracket(lie_basis(i), lie_basis(a));
            if (!(v == scaled(lie_basis(a), CycNum(w)))) fails.push_back("bad weight for " + g.label(a));
        }
        for (int r2 = 0; r2 < 24; ++r2) {
            int b = 4 + r2;
            const auto& s2 = g.roots()[r2].simple;
            std::array<int, 4> sum{};
            for (int k = 0; k < 4; ++k) sum[k] = s[k] + s2[k];
            int c = g.root_basis_index(sum);
            const auto& t = g.sc(a, b);
            if (c < 0) {
                bool opposite = true;
                for (int k = 0; k < 4; ++k) opposite &= sum[k] == 0;
                if (!opposite && !t.empty()) fails.push_back("nonzero bracket off the root system");
                continue;
            }
            // strings in D4 have length at most 2, so |N| = 1
            if (t.size() != 1 || t[0].index != c || (t[0].coeff != 1 && t[0].coeff != -1))
                fails.push_back("structure constant not +-1 for " + g.label(a) + "," + g.label(b));
            int nb = g.root_basis_index({-s2[0], -s2[1], -s2[2], -s2[3]});
            const auto& tn = g.sc(na, nb);
            if (tn.size() != 1 || tn[0].coeff != -t[0].coeff)
                fails.push_back("N(-a,-b) != -N(a,b) for " + g.label(a) + "," + g.label(b));
        }
    }
    return fails;
}

}  // namespace rebit
