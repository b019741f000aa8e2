#pragma once
// Mixed elements p + e: homogeneous sl2-triples, quadruple stabilizers, the
// mu-twist search for real nilpotent parts, and the tabulated mixed rows.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rebit/galois.hpp"
#include "rebit/ssorbits.hpp"

namespace rebit {

// Parse a tensor such as "-e0110", "e1011+e0111-e0010" or "1/2*(e1111-e0000)".
Tensor parse_tensor(const std::string& s);

struct Sl2Triple {
    G0Elt h;
    Tensor e, f;
};
// Homogeneous triple (h, e, f) in the centralizer of p: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
Sl2Triple sl2_complete(const Tensor& p, const Tensor& e);
// Relation failures (empty if the triple is valid and commutes with p).
std::vector<std::string> check_triple(const Tensor& p, const Sl2Triple& t);

// Nilpotent element n_{i,r} for p in Sigma_i (i = 2..10).
int nilpotent_count(int i);
Tensor nilpotent_n(int i, int r);
// Real nilpotent element n_{i,j,r} for p' outside Sigma, if listed.
std::optional<Tensor> nilpotent_nj(int i, int j, int r);
// r of n_{i,r} in the complex orbit of n_{i,j,r}.
int nilpotent_source(int i, int j, int r);

struct MixedBlock {
    int i = 0, j = 1, r = 0;
    char basis = 'u';               // Cartan space of the semisimple parts (4 coordinates)
    std::vector<std::string> ss;    // listed semisimple part of row k
    std::vector<std::string> nil;   // listed nilpotent part of row k
    std::map<int, std::string> ss_amended, nil_amended;
    std::string note;
    int from = 0;                   // nonzero: obtained from case `from` by slot permutation
    std::array<int, 4> perm{0, 1, 2, 3};
    int row_count() const { return static_cast<int>(ss.size()); }
};

const std::vector<MixedBlock>& mixed_blocks();
const MixedBlock& mixed_block(int i, int j, int r);
std::vector<const MixedBlock*> mixed_blocks_of(int i);

// Stabilizer of the canonical quadruple of block (i, j, r) with its listed H^1 classes.
struct QuadrupleStabilizer {
    CentralizerSpec spec;
    std::vector<GElt> h1;
    std::string ref;
};
QuadrupleStabilizer quadruple_stabilizer(int i, int j, int r);

// Sample parameters: the canonical semisimple sample of block (i, j).
std::vector<CycNum> mixed_sample(int i, int j);

struct MixedRep {
    int k = 0;
    Tensor s, n;
};
// Instantiated rows of block (i, j, r).
std::vector<MixedRep> quadruple_reps(int i, int j, int r, const std::vector<CycNum>& lam);
std::vector<MixedRep> quadruple_reps(int i, int j, int r);

struct Quadruple {
    Tensor p;
    Sl2Triple t;
};
// (p', h', e', f') built from row 1 of the block.
Quadruple canonical_quadruple(int i, int j, int r);
CentralizerCheck verify_centralizer(int i, int j, int r);

// mu(x) = n conj(x) on U_p = z(p) cap g1.
Tensor mu_apply(const GElt& n, const Tensor& x);
struct MuSpace {
    int complex_dim = 0;  // dim_C U_p
    int real_dim = 0;     // dim of the mu-fixed space over the real subfield
    std::vector<Tensor> fixed_basis;
};
// Throws MathError("not a valid twist") unless mu preserves U_p and mu^2 = 1 there.
MuSpace u_p_mu_fixed(const Tensor& p, const GElt& n);

struct RealNilpotent {
    enum class Status { Found, NoRealPoint, Undecided };
    Status status = Status::Undecided;
    Tensor x;                           // mu(x) = x, x = conjugator * e
    GElt conjugator = GElt::identity();  // element of Z(q)
    std::string detail;
};
// Search the Z(q)-orbit of e (q in the family of case i) for a mu-fixed point.
RealNilpotent find_real_nilpotent(int i, const HVec& q, const GElt& n, const Tensor& e);

struct MixedReport {
    int rows = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
};
MixedReport verify_mixed_block(const MixedBlock& b);
MixedReport verify_mixed_tables(int only_case = 0);
MixedReport verify_nilpotent_elements();

struct MixedLabel {
    int i = 0, j = 0, r = 0, k = 0;
    std::vector<CycNum> lambda;
    std::vector<std::array<int, 2>> same_orbit;  // all (r, k) matching the input
    SSLabel semisimple;
};
// Jordan split, semisimple label, then the nilpotent part against the stored rows.
MixedLabel classify_mixed(const Tensor& t);

}  // namespace rebit
