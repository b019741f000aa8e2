#pragma once
// The Cartan subspace h = span(u1..u4) of g1, its restricted roots, the Weyl
// group, the closed subsystems, and the normalizer of h in SL(2)^4.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rebit/group.hpp"
#include "rebit/lie.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

using HVec = std::array<CycNum, 4>;

struct RestrictedRoot {
    HVec values;   // alpha(u_1), ..., alpha(u_4)
    LieElt vec;    // root vector
    HVec coroot;   // h_alpha in u-coordinates
};

struct Subsystem {
    int i = 0;
    std::string type;
    std::vector<int> roots;     // indices into restricted roots
    Matrix family;              // 4 x k: u-coordinates = family * lambda
    std::vector<Matrix> gamma_gens;
    std::vector<Matrix> gamma;  // the generated group
    std::string centralizer_type;
};

class CartanData {
public:
    static const CartanData& get();

    std::array<Tensor, 4> u;
    std::vector<RestrictedRoot> roots;
    std::vector<Matrix> weyl;            // identity first
    std::vector<GElt> center;            // Z(h) in SL(2)^4
    std::vector<GElt> reflection_lifts;  // one per restricted root
    std::vector<GElt> normalizer;        // N(h), identity first
    std::vector<int> normalizer_weyl;    // image of each element in weyl
    std::vector<Subsystem> subsystems;   // i = 1..11 at index i-1

    int weyl_index(const Matrix& w) const;
    // Some element of N(h) inducing weyl[k].
    const GElt& lift(int k) const { return normalizer[lift_[k]]; }

private:
    CartanData();
    std::vector<int> lift_;
    std::unordered_map<std::string, int> weyl_key_;
};

Tensor h_elt(const HVec& lam);
std::optional<HVec> h_coords(const Tensor& x);
HVec apply(const Matrix& w, const HVec& v);
CycNum root_value(const RestrictedRoot& r, const HVec& p);

// Matrix of g on h (u-coordinates), if g normalizes h.
std::optional<Matrix> weyl_of(const GElt& g);

// Roots vanishing on p.
std::vector<int> vanishing_roots(const HVec& p);

struct Membership {
    int i;          // subsystem index 1..11
    int w;          // weyl index with weyl[w] * p in the family of Pi_i
    HVec image;     // weyl[w] * p
    std::vector<CycNum> lambda;  // family parameters of the image
};
Membership component_membership(const HVec& p);

// Seven Cartan subspaces: witnesses g*_m and listed bases.
struct CartanSpace {
    int m;
    char name;
    GElt witness;
    std::array<Tensor, 4> basis;
};
const std::vector<CartanSpace>& cartan_spaces();
// Coordinates of x in the span of cartan_spaces()[m-1].basis, if it lies there.
std::optional<HVec> cartan_coords(int m, const Tensor& x);
// First m (1..7) with x in the span of basis m.
std::optional<int> cartan_detect(const Tensor& x);

// Slot permutation automorphisms used to obtain families 5,6,8,9 from 4 and 7.
const std::array<int, 4>& perm_23();
const std::array<int, 4>& perm_24();

}  // namespace rebit
