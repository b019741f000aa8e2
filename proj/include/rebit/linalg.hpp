#pragma once
// Dense matrices and univariate polynomials over Q(eta).

#include <optional>
#include <vector>

#include "rebit/field.hpp"

namespace rebit {

using Vec = std::vector<CycNum>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c) {}
    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    CycNum& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const CycNum& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const CycNum& s) const;
    Matrix transpose() const;
    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    int rank() const;
    // Basis of {x : A x = 0}.
    std::vector<Vec> kernel() const;
    // Some solution of A x = b, if any.
    std::optional<Vec> solve(const Vec& b) const;
    std::optional<Matrix> inverse() const;
    CycNum trace() const;
    CycNum det() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<CycNum> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);

// Rank of a list of vectors.
int rank_of(const std::vector<Vec>& vs);

class Poly {
public:
    Poly() = default;
    explicit Poly(Vec c) : c_(std::move(c)) { trim(); }
    static Poly x() { return Poly(Vec{CycNum(0), CycNum(1)}); }
    static Poly constant(const CycNum& a) { return Poly(Vec{a}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const CycNum& operator[](int k) const { return c_[k]; }
    const Vec& coeffs() const { return c_; }
    CycNum lead() const { return c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly derivative() const;
    Poly monic() const;
    // Quotient and remainder.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    CycNum eval(const CycNum& t) const;
    Matrix eval(const Matrix& m) const;
    // p(t^2)
    Poly compose_square() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    Vec c_;
};

Poly gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);
Poly charpoly(const Matrix& m);

}  // namespace rebit
