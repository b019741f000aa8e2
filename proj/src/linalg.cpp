#include "rebit/linalg.hpp"

namespace rebit {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::logic_error("matrix shape mismatch");
    Matrix r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const CycNum& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const CycNum& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::logic_error("matrix shape mismatch");
    Vec r(r_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k)
            if (!(*this)(i, k).is_zero() && !v[k].is_zero()) r[i] += (*this)(i, k) * v[k];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

Matrix Matrix::scaled(const CycNum& s) const {
    Matrix r = *this;
    for (auto& x : r.a_)
        if (!x.is_zero()) x *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

CycNum Matrix::trace() const {
    CycNum t;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

CycNum Matrix::det() const {
    if (r_ != c_) throw MathError("determinant of a non-square matrix");
    Matrix m = *this;
    CycNum d(1);
    for (int c = 0; c < c_; ++c) {
        int p = c;
        while (p < r_ && m(p, c).is_zero()) ++p;
        if (p == r_) return CycNum(0);
        if (p != c) {
            for (int k = 0; k < c_; ++k) std::swap(m(p, k), m(c, k));
            d = -d;
        }
        d *= m(c, c);
        CycNum inv = m(c, c).inv();
        for (int r = c + 1; r < r_; ++r) {
            if (m(r, c).is_zero()) continue;
            CycNum f = m(r, c) * inv;
            for (int k = c; k < c_; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return d;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                // prefer the sparsest pivot to limit growth
                if (p < 0 || m(i, c).nnz() < m(p, c).nnz()) p = i;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        CycNum inv = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            CycNum f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(rref(m).size());
}

std::vector<Vec> Matrix::kernel() const {
    Matrix m = *this;
    auto piv = rref(m);
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < c_; ++f) {
        if (is_piv[f]) continue;
        Vec v(c_);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(static_cast<int>(k), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    Matrix m(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        m(i, c_) = b[i];
    }
    auto piv = rref(m);
    if (!piv.empty() && piv.back() == c_) return std::nullopt;
    Vec x(c_);
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = m(static_cast<int>(k), c_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (r_ != c_) return std::nullopt;
    int n = r_;
    Matrix m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
        m(i, n + i) = 1;
    }
    auto piv = rref(m);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(i, n + j);
    return r;
}

int rank_of(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    Matrix m(static_cast<int>(vs.size()), static_cast<int>(vs[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = vs[i][j];
    return m.rank();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Vec r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    Vec r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Vec r(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    Vec r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * CycNum(static_cast<long>(k));
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    CycNum l = lead().inv();
    Vec r = c_;
    for (auto& x : r) x *= l;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw MathError("division by zero");
    Vec rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    Vec q(degree() - dd + 1);
    CycNum li = d.lead().inv();
    for (int k = degree(); k >= dd; --k) {
        if (rem[k].is_zero()) continue;
        CycNum f = rem[k] * li;
        q[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

CycNum Poly::eval(const CycNum& t) const {
    CycNum r;
    for (int k = degree(); k >= 0; --k) r = r * t + c_[k];
    return r;
}

Matrix Poly::eval(const Matrix& m) const {
    int n = m.rows();
    Matrix r(n, n);
    for (int k = degree(); k >= 0; --k) {
        r = r * m;
        for (int i = 0; i < n; ++i) r(i, i) += c_[k];
    }
    return r;
}

Poly Poly::compose_square() const {
    if (is_zero()) return *this;
    Vec r(2 * c_.size() - 1);
    for (std::size_t k = 0; k < c_.size(); ++k) r[2 * k] = c_[k];
    return Poly(std::move(r));
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

Poly charpoly(const Matrix& a) {
    // Faddeev-LeVerrier: det(tI - A).
    int n = a.rows();
    Vec c(n + 1);
    c[n] = 1;
    Matrix m = Matrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        Matrix am = a * m;
        CycNum ck = -am.trace() * CycNum(1, k);
        c[n - k] = ck;
        m = am;
        for (int i = 0; i < n; ++i) m(i, i) += ck;
    }
    return Poly(std::move(c));
}

}  // namespace rebit
