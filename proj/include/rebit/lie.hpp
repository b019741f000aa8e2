#pragma once
// D4 in a Chevalley basis, graded by the parity of the coefficient of the
// central simple root, with g0 = sl(2)^4 and g1 = 2x2x2x2 tensors.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rebit/group.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

constexpr int kDim = 28;
using LieElt = std::array<CycNum, kDim>;

struct Root {
    std::array<int, 4> simple;  // coefficients of gamma_1..gamma_4
    std::array<int, 4> eps;     // coordinates in the standard so(8) basis
    int height() const { return simple[0] + simple[1] + simple[2] + simple[3]; }
};

struct Term {
    int index;
    long coeff;
};

class D4 {
public:
    static const D4& get();

    // Basis: 0..3 coroots h_1..h_4, 4..15 positive roots, 16..27 their negatives.
    const std::vector<Root>& roots() const { return roots_; }  // indexed by basis index - 4
    int root_basis_index(const std::array<int, 4>& simple) const;  // -1 if not a root
    std::string label(int a) const;
    int degree(int a) const { return degree_[a]; }
    const std::vector<Term>& sc(int a, int b) const { return sc_[a][b]; }
    int cartan(int i, int j) const { return cartan_[i][j]; }

    // Integer 8x8 matrix of a basis element in the natural representation.
    const std::array<std::array<int, 8>, 8>& rep(int a) const { return rep_[a]; }

    // Graded identification.
    int tensor_index(int a) const { return t_index_[a]; }  // -1 if degree 0
    int tensor_sign(int a) const { return t_sign_[a]; }
    int basis_of_tensor(int idx) const { return t_basis_[idx]; }
    // Bracket of two tensor basis vectors, as an sl(2)^4 element.
    const G0Elt& tensor_bracket(int i, int j) const { return tb_[i][j]; }
    // Root of g0 used for slot k (E_k = x_{beta_k}).
    const std::array<int, 4>& slot_roots() const { return slot_root_; }

private:
    D4();
    std::vector<Root> roots_;
    std::array<int, kDim> degree_{};
    std::array<std::array<int, 4>, 4> cartan_{};
    std::vector<std::vector<std::vector<Term>>> sc_;
    std::vector<std::array<std::array<int, 8>, 8>> rep_;
    std::array<int, kDim> t_index_{}, t_sign_{};
    std::array<int, 16> t_basis_{};
    std::array<std::array<G0Elt, 16>, 16> tb_;
    std::array<int, 4> slot_root_{};
    std::array<std::array<int, 2>, kDim> pos_{};

public:
    // beta_k(h_i): the coroot h_i acts on slot k as (value/2) * H_k.
    std::array<std::array<int, 4>, 4> h_weight{};
    // H_k = sum_i H_to_h[k][i] h_i
    std::array<std::array<int, 4>, 4> H_to_h{};
    const std::array<int, 2>& position(int a) const { return pos_[a]; }
};

LieElt lie_zero();
LieElt lie_basis(int a);
LieElt operator+(const LieElt& a, const LieElt& b);
LieElt operator-(const LieElt& a, const LieElt& b);
LieElt scaled(const LieElt& a, const CycNum& s);
bool lie_is_zero(const LieElt& a);
LieElt bracket(const LieElt& x, const LieElt& y);

struct Graded {
    G0Elt x0;
    Tensor x1;
    bool is_zero() const { return x0.is_zero() && x1.is_zero(); }
    friend bool operator==(const Graded& a, const Graded& b) { return a.x0 == b.x0 && a.x1 == b.x1; }
};

Graded to_graded(const LieElt& x);
LieElt from_graded(const Graded& g);
LieElt from_tensor(const Tensor& t);
LieElt from_g0(const G0Elt& x);

Graded bracket(const Graded& x, const Graded& y);
G0Elt bracket(const Tensor& x, const Tensor& y);

// Natural 8-dimensional representation.
Matrix to_matrix(const LieElt& x);
LieElt from_matrix(const Matrix& m);

// ad x on the Chevalley coordinates (28x28).
Matrix ad_matrix(const LieElt& x);

// Jacobi identity and Chevalley sign checks; returns a list of failures.
std::vector<std::string> check_structure();

}  // namespace rebit

namespace rebit {

struct JordanParts {
    LieElt s, n;
};
// Additive Jordan decomposition, computed in the 8-dimensional representation.
JordanParts jordan_decompose(const LieElt& x);
bool is_semisimple(const LieElt& x);
bool is_nilpotent(const LieElt& x);
int centralizer_dim(const LieElt& x);
// Basis of the centralizer of x intersected with g1.
std::vector<Tensor> centralizer_g1(const LieElt& x);

}  // namespace rebit
