#pragma once
// SL(2)^4 acting on 2x2x2x2 tensors, and the matching Lie algebra sl(2)^4.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "rebit/field.hpp"

namespace rebit {

struct Mat2 {
    CycNum a, b, c, d;  // [[a,b],[c,d]]

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 zero() { return {0, 0, 0, 0}; }

    CycNum det() const { return a * d - b * c; }
    Mat2 inv() const;
    Mat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 scaled(const CycNum& s) const { return {a * s, b * s, c * s, d * s}; }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
    bool is_antidiagonal() const { return a.is_zero() && d.is_zero(); }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
    static int compare(const Mat2& x, const Mat2& y);
    std::size_t hash() const;
    std::string pretty() const;
};

// Named matrices.
namespace mats {
Mat2 I();
Mat2 J();   // [[0,1],[-1,0]]
Mat2 K();   // [[0,i],[i,0]]
Mat2 L();   // diag(i,-i)
Mat2 M();   // diag(zeta^3,-zeta)
Mat2 N();   // diag(zeta,-zeta^3)
Mat2 F();   // [[1/2, i/2],[i, 1]]
Mat2 D(const CycNum& u);  // diag(u, u^-1)
Mat2 sharp(const Mat2& m);  // [[a,b],[c,d]] -> [[d,c],[b,a]]
// Parse a short name like "I", "-K", "LF", "D(eta^5)", "-D(eta^3)", "MJ".
Mat2 by_name(const std::string& name);
}  // namespace mats

// Element of SL(2)^4 (or the ambient GL(2)^4 while checking).
struct GElt {
    std::array<Mat2, 4> f;

    static GElt identity() { return {{Mat2::identity(), Mat2::identity(), Mat2::identity(), Mat2::identity()}}; }
    GElt operator*(const GElt& o) const;
    GElt inv() const;
    GElt conj() const;
    bool is_identity() const;
    bool in_sl2() const;
    friend bool operator==(const GElt& x, const GElt& y) { return x.f == y.f; }
    friend bool operator!=(const GElt& x, const GElt& y) { return !(x == y); }
    static int compare(const GElt& x, const GElt& y);
    friend bool operator<(const GElt& x, const GElt& y) { return compare(x, y) < 0; }
    std::size_t hash() const;
    std::string pretty() const;
    // "(L,I,-K,K)" style names, each factor parsed by mats::by_name.
    static GElt parse_names(const std::string& s);
};

struct GEltHash {
    std::size_t operator()(const GElt& g) const { return g.hash(); }
};

// Closure of gens under multiplication; MathError past `limit` elements.
std::vector<GElt> generate_group(const std::vector<GElt>& gens, std::size_t limit = 100000);

// Integer element of SL(2)^4: per slot a product of `steps` elementary
// matrices with off-diagonal entries in [-bound, bound].
GElt random_real_element(std::mt19937_64& rng, int bound = 2, int steps = 3);

// Twisted action used in Galois cohomology: g^-1 conj(g).
GElt coboundary(const GElt& g);

// 2x2x2x2 tensor; index bits (i1 i2 i3 i4) -> 8*i1 + 4*i2 + 2*i3 + i4.
struct Tensor {
    std::array<CycNum, 16> t;

    static Tensor basis(int idx);
    static Tensor basis(const std::string& bits);
    static int index(const std::string& bits);
    static std::string bits(int idx);

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator-() const;
    Tensor scaled(const CycNum& s) const;
    Tensor conj() const;
    bool is_zero() const;
    bool is_real() const { return conj() == *this; }
    int support_mask() const;
    friend bool operator==(const Tensor& x, const Tensor& y) { return x.t == y.t; }
    friend bool operator!=(const Tensor& x, const Tensor& y) { return !(x == y); }
    std::string pretty() const;
};

// Element of sl(2)^4 = degree-zero part.
struct G0Elt {
    std::array<Mat2, 4> x{Mat2::zero(), Mat2::zero(), Mat2::zero(), Mat2::zero()};

    G0Elt operator+(const G0Elt& o) const;
    G0Elt operator-(const G0Elt& o) const;
    G0Elt scaled(const CycNum& s) const;
    bool is_zero() const;
    friend bool operator==(const G0Elt& a, const G0Elt& b) { return a.x == b.x; }
    // 12 coordinates: per slot (a, b, c) with X = [[a,b],[c,-a]].
    std::array<CycNum, 12> coords() const;
    static G0Elt from_coords(const std::array<CycNum, 12>& c);
    static G0Elt basis(int k);
};

G0Elt bracket(const G0Elt& x, const G0Elt& y);

Tensor act(const GElt& g, const Tensor& x);
// Action of a single matrix on one slot.
Tensor act_slot(int slot, const Mat2& m, const Tensor& x);
// Derivation action of sl(2)^4 on tensors.
Tensor act(const G0Elt& x, const Tensor& v);
// Adjoint action on sl(2)^4.
G0Elt act(const GElt& g, const G0Elt& x);

// Slot permutation: result slot k carries input slot perm[k].
Tensor permute(const std::array<int, 4>& perm, const Tensor& x);
GElt permute(const std::array<int, 4>& perm, const GElt& g);
G0Elt permute(const std::array<int, 4>& perm, const G0Elt& x);

}  // namespace rebit
