#pragma once
// Exact arithmetic in Q(eta), eta a primitive 16th root of unity (eta^8 = -1).

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace rebit {

// Raised for mathematically invalid input (bad twists, singular systems, ...).
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for malformed textual input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CycNum {
public:
    static constexpr int D = 8;

    CycNum() = default;
    CycNum(long v) { c_[0] = v; }  // NOLINT: implicit on purpose
    CycNum(int v) { c_[0] = v; }   // NOLINT
    explicit CycNum(const mpq_class& q) { c_[0] = q; }
    CycNum(long num, long den) { c_[0] = mpq_class(num, den); c_[0].canonicalize(); }

    static CycNum eta(int k);
    static CycNum zeta() { return eta(2); }
    static CycNum i() { return eta(4); }
    static CycNum sqrt2();

    const mpq_class& operator[](int k) const { return c_[k]; }
    mpq_class& operator[](int k) { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_real() const { return conj() == *this; }
    // True when the value lies in Q(i).
    bool is_gaussian() const;
    int nnz() const;

    CycNum conj() const { return galois(15); }
    CycNum galois(int k) const;
    CycNum inv() const;
    CycNum pow(long e) const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const mpq_class& q);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }
    CycNum operator-() const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Lexicographic order on the coefficient vector; used for canonical choices.
    static int compare(const CycNum& a, const CycNum& b);
    friend bool operator<(const CycNum& a, const CycNum& b) { return compare(a, b) < 0; }

    // Real part and "imaginary part" (both in the maximal real subfield).
    CycNum re() const;
    CycNum im() const;

    std::complex<double> approx() const;
    // Sign of a real value (-1, 0, 1); throws MathError if the value is not real.
    int sign() const;

    // "c0,...,c7"
    std::string str() const;
    static CycNum parse(const std::string& s);
    // Human readable, e.g. "1/2 - 3*i" or "eta^3 + 2*eta".
    std::string pretty() const;

    std::size_t hash() const;

private:
    std::array<mpq_class, D> c_;
};

mpq_class parse_rational(const std::string& s);

struct CycHash {
    std::size_t operator()(const CycNum& x) const { return x.hash(); }
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace rebit
