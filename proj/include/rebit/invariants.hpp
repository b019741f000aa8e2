#pragma once
// Polynomial invariants of SL(2)^4 on 2x2x2x2 tensors.

#include <array>
#include <string>

#include "rebit/field.hpp"
#include "rebit/group.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

// Coefficients c[a][b] (a <= b) of the quadratic invariant sum c_ab t_a t_b.
using QuadraticForm = std::array<std::array<CycNum, 16>, 16>;

// Solves the invariance system for degree-2 polynomials; the solution space
// must be 1-dimensional. Normalized so that the t_0000 t_1111 coefficient is 1.
const QuadraticForm& derive_quadratic();
// Dimension of the solution space found by derive_quadratic.
int quadratic_solution_dim();

CycNum quadratic_invariant(const Tensor& t);

enum class Pairing { P12_34, P13_24, P14_23 };
const char* pairing_name(Pairing p);
// 4x4 reshaping of t with rows indexed by the first pair of slots.
Matrix flattening(const Tensor& t, Pairing p);
CycNum flattening_det(const Tensor& t, Pairing p);

// a[i][j][k]; discriminant of det(x0 A0 + x1 A1).
using Array222 = std::array<std::array<std::array<CycNum, 2>, 2>, 2>;
CycNum hyperdet222(const Array222& a);
// Slice of t with slot `slot` (0-based) fixed to `value`.
Array222 slice(const Tensor& t, int slot, int value);

struct InvariantVector {
    CycNum H, L12, L13, L14;
    friend bool operator==(const InvariantVector& a, const InvariantVector& b) {
        return a.H == b.H && a.L12 == b.L12 && a.L13 == b.L13 && a.L14 == b.L14;
    }
};

InvariantVector invariants_of(const Tensor& t);
// Sound non-conjugacy witness: true if some invariant differs.
bool separates(const Tensor& a, const Tensor& b);

// Two copies of (C^2)^{x3} under sl(2)^3: generic orbit dimension and the
// number of independent invariants 2*8 - dim.
struct CountingIdentity {
    int copies_dim = 0, orbit_dim = 0, invariants = 0;
};
CountingIdentity two_center_count();

}  // namespace rebit
