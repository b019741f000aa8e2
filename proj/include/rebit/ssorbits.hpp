#pragma once
// Real semisimple orbits: per-family case data (gamma_j, n_j, g_j, H^1 lists),
// the tabulated representative rows, their verification, and the classifier.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rebit/cartan.hpp"
#include "rebit/galois.hpp"
#include "rebit/group.hpp"

namespace rebit {

// c0 + sum_k c[k] lambda_k
struct LinExpr {
    CycNum c0;
    std::vector<CycNum> c;
    CycNum eval(const std::vector<CycNum>& lam) const;
};

// Parse a row such as "i*(-l1+l4, l1, 0, l4)/2" into one linear form per entry.
// Parameters are named in `params` ("l1", "l4", ...). Throws ParseError on
// syntax errors or non-linear expressions.
std::vector<LinExpr> parse_row(const std::string& s, const std::vector<std::string>& params);

struct SSBlock {
    int j = 0;
    std::vector<int> gamma;          // as printed: 4 diagonal entries or 16 entries
    std::string n, g;                // n = g^-1 conj(g)
    std::vector<std::string> z;      // H^1 classes of Z(g q'), in the frame of g
    char basis = 'u';
    std::vector<int> slots;          // basis vectors (1-based) carrying the entries
    std::vector<std::string> rows;   // listed rows, row k belongs to z_k
    std::map<int, std::string> amended;  // k -> row replacing or extending the listed ones
    std::string note;                    // amendment of the block header, if any
    std::map<int, std::string> z_amended;  // k -> class representative replacing z_k
    int row_count() const { return std::max<int>(rows.size(), amended.empty() ? 0 : amended.rbegin()->first); }
};

struct SSCase {
    int i = 0;
    std::vector<std::string> params;
    std::vector<SSBlock> blocks;
    int from = 0;                    // nonzero: obtained from case `from` by slot permutation
    std::array<int, 4> perm{0, 1, 2, 3};
};

// i in 1..10.
const SSCase& ss_case(int i);
const SSBlock& ss_block(int i, int j);

Matrix gamma_matrix(const SSCase& c, const SSBlock& b);
GElt block_n(const SSCase& c, const SSBlock& b);
GElt block_g(const SSCase& c, const SSBlock& b);
std::vector<GElt> block_z(const SSCase& c, const SSBlock& b);
// Index (1..7) of the Cartan space holding the rows of the block.
int block_cartan(const SSCase& c, const SSBlock& b);

// q' = family * lambda, in u-coordinates.
HVec family_point(int i, const std::vector<CycNum>& lam);
bool regular(int i, const HVec& q);

struct RealityPattern {
    std::vector<Vec> real_part, imag_part;  // lambda = sum a_r real_part[r] + i sum b_s imag_part[s]
    std::vector<std::string> coord;         // "real", "imaginary" or "coupled"
};
RealityPattern reality_pattern(int i, int j);
// conj(q') = gamma_j^-1 q' and q' regular.
bool admissible(int i, int j, const std::vector<CycNum>& lam);
// First `count` admissible parameter tuples in a fixed enumeration order.
std::vector<std::vector<CycNum>> sample_parameters(int i, int j, int count = 1);

struct RealPoint {
    Tensor p;
    GElt g;
};
RealPoint real_point(int i, int j, const std::vector<CycNum>& lam);
// One real representative eps(z_k) g_j q' per class k (1-based).
std::vector<std::pair<int, Tensor>> orbit_reps(int i, int j, const std::vector<CycNum>& lam);
// Listed row k of block (i, j), instantiated.
Tensor table_row(int i, int j, int k, const std::vector<CycNum>& lam);

// Some g with g q = t, t in the span of Cartan space m (found by cartan_detect when m = 0).
std::optional<GElt> cartan_conjugator(const HVec& q, const Tensor& t, int m = 0);

// Classes k (1-based) of block (i, j) whose real orbit contains t; t must be a
// real point in Cartan position of the complex orbit of q'(lambda).
std::vector<int> class_matches(int i, int j, const std::vector<CycNum>& lam, const Tensor& t);

struct SSReport {
    int rows = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
};
// All checks for one case, optionally with replaced data (negative controls).
SSReport verify_ss_case(const SSCase& c, int samples = 1);
SSReport verify_ss_tables(int only_case = 0, int samples = 1);

struct SSLabel {
    int i = 0, j = 0, k = 0, m = 0;
    std::vector<CycNum> lambda;
    std::vector<int> same_orbit;  // all listed k of block (i, j) naming this real orbit
};

struct ClassifyError : MathError {
    std::string kind;  // "not-real", "nilpotent-part", "general-position"
    std::vector<int> families;  // candidates for general-position input
    ClassifyError(std::string kind_, const std::string& msg, std::vector<int> fam = {})
        : MathError(msg), kind(std::move(kind_)), families(std::move(fam)) {}
};

// Canonical parameters: greatest admissible Gamma-image, comparing (re, im) per coordinate.
std::vector<CycNum> canonical_lambda(int i, int j, const std::vector<CycNum>& lam);
int compare_lambda(const std::vector<CycNum>& a, const std::vector<CycNum>& b);

SSLabel classify_semisimple(const Tensor& t);

// Candidate families of a semisimple element from centralizer dimensions.
std::vector<int> families_by_centralizer(const Tensor& t);

}  // namespace rebit
