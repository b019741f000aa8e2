#include "rebit/invariants.hpp"

#include <utility>

#include "rebit/linalg.hpp"

namespace rebit {

namespace {

int mono_index(int a, int b) {
    if (a > b) std::swap(a, b);
    // position of (a, b), a <= b, in row-major upper-triangular order
    return a * 16 - a * (a - 1) / 2 + (b - a);
}

struct Quadratic {
    QuadraticForm form;
    int dim = 0;
};

Quadratic solve_quadratic() {
    constexpr int nm = 136;
    std::vector<std::array<int, 2>> mono(nm);
    for (int a = 0; a < 16; ++a)
        for (int b = a; b < 16; ++b) mono[mono_index(a, b)] = {a, b};

    Matrix sys(12 * nm, nm);
    for (int x = 0; x < 12; ++x) {
        G0Elt X = G0Elt::basis(x);
        // A[a][e] = coefficient of t_e in (X t)_a
        std::array<std::array<CycNum, 16>, 16> A;
        for (int e = 0; e < 16; ++e) {
            Tensor col = act(X, Tensor::basis(e));
            for (int a = 0; a < 16; ++a) A[a][e] = col.t[a];
        }
        for (int u = 0; u < nm; ++u) {
            auto [a, b] = mono[u];
            for (int e = 0; e < 16; ++e) {
                if (!A[a][e].is_zero()) sys(x * nm + mono_index(e, b), u) += A[a][e];
                if (!A[b][e].is_zero()) sys(x * nm + mono_index(a, e), u) += A[b][e];
            }
        }
    }
    auto ker = sys.kernel();
    Quadratic q;
    q.dim = static_cast<int>(ker.size());
    if (q.dim != 1) return q;
    CycNum norm = ker[0][mono_index(0, 15)];
    if (norm.is_zero()) throw MathError("invariance system degenerate");
    CycNum s = norm.inv();
    for (int u = 0; u < nm; ++u) q.form[mono[u][0]][mono[u][1]] = ker[0][u] * s;
    return q;
}

const Quadratic& quadratic() {
    static const Quadratic q = solve_quadratic();
    return q;
}

CycNum det2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) { return a * d - b * c; }

}  // namespace

const QuadraticForm& derive_quadratic() {
    const auto& q = quadratic();
    if (q.dim != 1) throw MathError("invariance system degenerate");
    return q.form;
}

int quadratic_solution_dim() { return quadratic().dim; }

CycNum quadratic_invariant(const Tensor& t) {
    const auto& c = derive_quadratic();
    CycNum s;
    for (int a = 0; a < 16; ++a) {
        if (t.t[a].is_zero()) continue;
        for (int b = a; b < 16; ++b)
            if (!c[a][b].is_zero() && !t.t[b].is_zero()) s += c[a][b] * t.t[a] * t.t[b];
    }
    return s;
}

const char* pairing_name(Pairing p) {
    switch (p) {
        case Pairing::P12_34: return "12|34";
        case Pairing::P13_24: return "13|24";
        case Pairing::P14_23: return "14|23";
    }
    return "?";
}

Matrix flattening(const Tensor& t, Pairing p) {
    // slots (0-based) forming the row index, then the column index
    std::array<int, 4> s;
    switch (p) {
        case Pairing::P12_34: s = {0, 1, 2, 3}; break;
        case Pairing::P13_24: s = {0, 2, 1, 3}; break;
        case Pairing::P14_23: s = {0, 3, 1, 2}; break;
    }
    Matrix m(4, 4);
    for (int idx = 0; idx < 16; ++idx) {
        auto bit = [&](int slot) { return (idx >> (3 - slot)) & 1; };
        m(2 * bit(s[0]) + bit(s[1]), 2 * bit(s[2]) + bit(s[3])) = t.t[idx];
    }
    return m;
}

CycNum flattening_det(const Tensor& t, Pairing p) { return flattening(t, p).det(); }

CycNum hyperdet222(const Array222& a) {
    const auto& A0 = a[0];
    const auto& A1 = a[1];
    CycNum al = det2(A0[0][0], A0[0][1], A0[1][0], A0[1][1]);
    CycNum ga = det2(A1[0][0], A1[0][1], A1[1][0], A1[1][1]);
    CycNum be = det2(A0[0][0] + A1[0][0], A0[0][1] + A1[0][1], A0[1][0] + A1[1][0], A0[1][1] + A1[1][1]) - al - ga;
    return be * be - CycNum(4) * al * ga;
}

Array222 slice(const Tensor& t, int slot, int value) {
    Array222 a;
    std::array<int, 3> rest;
    for (int k = 0, r = 0; k < 4; ++k)
        if (k != slot) rest[r++] = k;
    for (int idx = 0; idx < 16; ++idx) {
        auto bit = [&](int s) { return (idx >> (3 - s)) & 1; };
        if (bit(slot) != value) continue;
        a[bit(rest[0])][bit(rest[1])][bit(rest[2])] = t.t[idx];
    }
    return a;
}

InvariantVector invariants_of(const Tensor& t) {
    return {quadratic_invariant(t), flattening_det(t, Pairing::P12_34), flattening_det(t, Pairing::P13_24),
            flattening_det(t, Pairing::P14_23)};
}

bool separates(const Tensor& a, const Tensor& b) { return !(invariants_of(a) == invariants_of(b)); }

CountingIdentity two_center_count() {
    // generic pair of 3-qubit states
    static const int v1[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    static const int v2[8] = {23, -29, 31, 37, -41, 43, 47, -53};
    auto apply3 = [](int slot, const Mat2& X, const int* v, Vec& out, int off) {
        for (int idx = 0; idx < 8; ++idx) {
            int i = (idx >> (2 - slot)) & 1;
            for (int j = 0; j < 2; ++j) {
                int src = (idx & ~(1 << (2 - slot))) | (j << (2 - slot));
                const CycNum& x = i == 0 ? (j == 0 ? X.a : X.b) : (j == 0 ? X.c : X.d);
                out[off + idx] += x * CycNum(v[src]);
            }
        }
    };
    const Mat2 gens[3] = {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    std::vector<Vec> tangent;
    for (int slot = 0; slot < 3; ++slot)
        for (const auto& X : gens) {
            Vec w(16);
            apply3(slot, X, v1, w, 0);
            apply3(slot, X, v2, w, 8);
            tangent.push_back(w);
        }
    CountingIdentity c;
    c.copies_dim = 2 * 8;
    c.orbit_dim = rank_of(tangent);
    c.invariants = c.copies_dim - c.orbit_dim;
    return c;
}

}  // namespace rebit
