#pragma once
// First Galois cohomology: finite groups with an involution, the normalizer of
// h, and centralizers of the form (torus or SL(2) factors) x finite group.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rebit/cartan.hpp"
#include "rebit/group.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

struct H1Classes {
    std::vector<int> reps;      // least element of each class, ascending
    std::vector<int> sizes;
    std::vector<int> class_of;  // per element; -1 for non-cocycles
    int cocycles = 0;
};

// A finite group given by its elements, with an automorphism sigma of order
// dividing 2. Instantiated for GElt (sigma = conj or twisted) and for 4x4
// Weyl matrices (sigma = identity).
template <class T>
class FiniteConjGroup {
public:
    using Sigma = std::function<T(const T&)>;

    FiniteConjGroup(std::vector<T> elements, Sigma sigma);
    static FiniteConjGroup generate(const std::vector<T>& gens, Sigma sigma, std::size_t limit = 20000);

    const std::vector<T>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    int index(const T& x) const;
    T sigma(const T& x) const { return sigma_(x); }

    bool is_cocycle(const T& c) const;
    // Some a with b = a c sigma(a)^-1.
    std::optional<T> equivalence_witness(const T& c, const T& b) const;
    H1Classes h1() const;

private:
    std::vector<T> elems_;
    Sigma sigma_;
    std::vector<std::size_t> hashes_;
    std::vector<std::vector<int>> buckets_;
};

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const;
};
int compare_matrix(const Matrix& a, const Matrix& b);

using WeylGroup = FiniteConjGroup<Matrix>;
using GGroup = FiniteConjGroup<GElt>;

WeylGroup weyl_group();
// Gamma_i with trivial conjugation, i = 1..11.
WeylGroup gamma_group(int i);
GGroup normalizer_group();

// Induced action on h in u-coordinates; MathError if n does not normalize h.
Matrix cocycle_to_weyl(const GElt& n);

struct CocycleLift {
    Matrix w;
    GElt n;
    std::string name;
};
// Cocycles of the group that induce the Weyl cocycles used in the classification.
const std::vector<CocycleLift>& weyl_cocycle_lifts();
// The stored lift inducing w, if any.
std::optional<GElt> lift_of_weyl(const Matrix& w);

struct EpsilonRow {
    std::string name;
    Mat2 a, eps;
};
// For each listed A with A conj(A) = 1 an element eps with eps^-1 conj(eps) = A.
const std::vector<EpsilonRow>& epsilon_table();
Mat2 epsilon(const Mat2& a);
GElt epsilon(const GElt& z);

// n*_m = (g*_m)^-1 conj(g*_m), m = 1..7.
GElt cartan_cocycle(int m);

// Centralizers Z = Z0 . F inside SL(2)^4, optionally viewed in a frame g
// (the group is then g Z g^-1). Z0 is a torus
//   {(D(m_1),...,D(m_4)) : m_k = prod_j a_j^exps[k][j]}
// or a product of SL(2) factors, slot k carrying factor form[k] (possibly sharp).
struct SlotForm {
    int factor = -1;  // -1: identity in this slot
    bool sharp = false;
};

struct CentralizerSpec {
    enum class Kind { Finite, Torus, SL2 };
    std::string tag;
    Kind kind = Kind::Finite;
    int dim = 0;
    std::array<std::vector<int>, 4> exps;  // Torus
    std::array<SlotForm, 4> form;          // SL2
    std::vector<GElt> finite_gens;
    GElt frame = GElt::identity();

    CentralizerSpec framed(const GElt& g) const;
    // Finite group generated by finite_gens (unframed).
    std::vector<GElt> finite_part() const;
    // Identity-component element (unframed) from parameters: torus values
    // a_1..a_dim, or 4 entries per SL(2) factor.
    GElt component_element(const std::vector<CycNum>& params) const;
    bool in_identity_component(const GElt& x) const;  // unframed
    bool contains(const GElt& x) const;               // framed
    // Decide z ~ z' (z' = a z conj(a)^-1 for some a in the framed group);
    // nullopt when the decision procedure does not apply.
    std::optional<bool> equivalent(const GElt& z, const GElt& zp) const;
};

CentralizerSpec finite_centralizer(std::string tag, std::vector<GElt> gens);
CentralizerSpec torus_centralizer(std::string tag, std::array<std::vector<int>, 4> exps, std::vector<GElt> gens);
CentralizerSpec sl2_centralizer(std::string tag, int factors, std::array<SlotForm, 4> form, std::vector<GElt> gens);

// Z(p) for p in the canonical component of family i (i = 1..10).
CentralizerSpec semisimple_centralizer(int i);

struct CentralizerCheck {
    bool ok = true;
    int lie_dim = -1;  // dimension of the stabilizer in sl(2)^4
    std::vector<std::string> failures;
};
// The framed group fixes every given tensor and commutes with every given
// sl(2)^4 element: generators and sampled identity-component elements are
// tested, and the stabilizer Lie algebra must have the dimension of Z0.
CentralizerCheck check_centralizer(const CentralizerSpec& spec, const std::vector<Tensor>& fixed,
                                   const std::vector<G0Elt>& fixed0 = {});

struct ClassListReport {
    bool ok = true;
    std::vector<std::string> failures;
};
// (a) each z is a cocycle in the group, (b) pairwise inequivalent,
// (c) the count matches.
ClassListReport verify_class_list(const CentralizerSpec& spec, const std::vector<GElt>& list, int expected);

// Torus equation: is there t in the torus of the spec with t y conj(t)^-1 = yp ?
bool torus_twist_solvable(const std::array<std::vector<int>, 4>& exps, int dim, const GElt& y, const GElt& yp);

}  // namespace rebit
