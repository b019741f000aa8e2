#include "rebit/lie.hpp"

namespace rebit {

namespace {

Matrix mat_pow(const Matrix& m, int e) {
    Matrix r = Matrix::identity(m.rows());
    for (int k = 0; k < e; ++k) r = r * m;
    return r;
}

}  // namespace

JordanParts jordan_decompose(const LieElt& x) {
    Matrix X = to_matrix(x);
    Poly q = squarefree_part(charpoly(X));
    Poly dq = q.derivative();
    // Newton iteration S <- S - q(S) q'(S)^-1 converges in finitely many steps.
    Matrix S = X;
    for (int it = 0; it < 16; ++it) {
        Matrix v = q.eval(S);
        if (v.is_zero()) break;
        auto inv = dq.eval(S).inverse();
        if (!inv) throw MathError("jordan: derivative not invertible");
        S = S - v * *inv;
    }
    if (!q.eval(S).is_zero()) throw MathError("jordan: iteration did not converge");
    LieElt s = from_matrix(S);
    return {s, x - s};
}

bool is_semisimple(const LieElt& x) {
    Matrix X = to_matrix(x);
    return squarefree_part(charpoly(X)).eval(X).is_zero();
}

bool is_nilpotent(const LieElt& x) { return mat_pow(to_matrix(x), 8).is_zero(); }

int centralizer_dim(const LieElt& x) { return kDim - ad_matrix(x).rank(); }

std::vector<Tensor> centralizer_g1(const LieElt& x) {
    const auto& d = D4::get();
    std::vector<int> cols;
    for (int a = 0; a < kDim; ++a)
        if (d.degree(a) == 1) cols.push_back(a);
    Matrix ad = ad_matrix(x);
    Matrix m(kDim, static_cast<int>(cols.size()));
    for (int i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, static_cast<int>(j)) = ad(i, cols[j]);
    std::vector<Tensor> out;
    for (const auto& v : m.kernel()) {
        LieElt y = lie_zero();
        for (std::size_t j = 0; j < cols.size(); ++j) y[cols[j]] = v[j];
        out.push_back(to_graded(y).x1);
    }
    return out;
}

}  // namespace rebit
