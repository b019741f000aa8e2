#include "rebit/field.hpp"

#include <cmath>
#include <sstream>

namespace rebit {

CycNum CycNum::eta(int k) {
    k %= 16;
    if (k < 0) k += 16;
    CycNum r;
    if (k < 8)
        r.c_[k] = 1;
    else
        r.c_[k - 8] = -1;
    return r;
}

CycNum CycNum::sqrt2() {
    // zeta + zeta^{-1} = eta^2 - eta^6
    CycNum r;
    r.c_[2] = 1;
    r.c_[6] = -1;
    return r;
}

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (c_[0] != 1) return false;
    for (int k = 1; k < D; ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (int k = 1; k < D; ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

bool CycNum::is_gaussian() const {
    for (int k = 0; k < D; ++k)
        if (k != 0 && k != 4 && sgn(c_[k]) != 0) return false;
    return true;
}

int CycNum::nnz() const {
    int n = 0;
    for (const auto& q : c_) n += sgn(q) != 0;
    return n;
}

CycNum CycNum::galois(int k) const {
    CycNum r;
    for (int j = 0; j < D; ++j) {
        if (sgn(c_[j]) == 0) continue;
        int m = (j * k) % 16;
        if (m < 8)
            r.c_[m] += c_[j];
        else
            r.c_[m - 8] -= c_[j];
    }
    return r;
}

CycNum CycNum::inv() const {
    if (is_zero()) throw MathError("division by zero");
    if (is_rational()) {
        CycNum r;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Tower Q(eta) > Q(zeta) > Q(i) > Q.
    CycNum s9 = galois(9);
    CycNum b = *this * s9;
    CycNum s5 = b.galois(5);
    CycNum c = b * s5;
    CycNum s3 = c.galois(3);
    CycNum d = c * s3;
    mpq_class n = 1 / d.c_[0];
    CycNum r = s9 * s5 * s3;
    r *= n;
    return r;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    for (int k = 0; k < D; ++k)
        if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    for (int k = 0; k < D; ++k)
        if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum r;
    for (int k = 0; k < D; ++k)
        if (sgn(c_[k]) != 0) r.c_[k] = -c_[k];
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    int ia[CycNum::D], ib[CycNum::D], na = 0, nb = 0;
    for (int k = 0; k < CycNum::D; ++k) {
        if (sgn(a.c_[k]) != 0) ia[na++] = k;
        if (sgn(b.c_[k]) != 0) ib[nb++] = k;
    }
    CycNum r;
    if (na == 0 || nb == 0) return r;
    mpq_class t;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            int j = ia[x], k = ib[y];
            t = a.c_[j] * b.c_[k];
            if (j + k < CycNum::D)
                r.c_[j + k] += t;
            else
                r.c_[j + k - CycNum::D] -= t;
        }
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

CycNum& CycNum::operator*=(const mpq_class& q) {
    for (auto& x : c_)
        if (sgn(x) != 0) x *= q;
    return *this;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
    for (int k = 0; k < D; ++k) {
        int c = cmp(a.c_[k], b.c_[k]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

CycNum CycNum::re() const {
    CycNum r = *this + conj();
    r *= mpq_class(1, 2);
    return r;
}

CycNum CycNum::im() const {
    CycNum r = (*this - conj()) * eta(12);  // divide by 2i
    r *= mpq_class(1, 2);
    return r;
}

std::string CycNum::str() const {
    std::string s;
    for (int k = 0; k < D; ++k) {
        if (k) s += ',';
        s += c_[k].get_str();
    }
    return s;
}

mpq_class parse_rational(const std::string& s0) {
    std::string s;
    for (char ch : s0)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty rational");
    std::size_t slash = s.find('/');
    auto check_int = [](const std::string& t) {
        std::size_t i = (t.size() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    if (slash == std::string::npos) {
        if (!check_int(s)) throw ParseError("bad rational '" + s0 + "'");
        return mpq_class(mpz_class(strip_plus(s)));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!check_int(p) || !check_int(q)) throw ParseError("bad rational '" + s0 + "'");
    mpz_class den(strip_plus(q));
    if (den == 0) throw MathError("division by zero");
    mpq_class r(mpz_class(strip_plus(p)), den);
    r.canonicalize();
    return r;
}

CycNum CycNum::parse(const std::string& s) {
    CycNum r;
    std::stringstream ss(s);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= D) throw ParseError("too many coefficients in '" + s + "'");
        r.c_[k++] = parse_rational(item);
    }
    if (k != D) throw ParseError("expected 8 coefficients in '" + s + "'");
    return r;
}

std::string CycNum::pretty() const {
    if (is_zero()) return "0";
    auto term = [](const mpq_class& q, const std::string& sym, bool first) {
        std::string out;
        mpq_class a = abs(q);
        bool neg = sgn(q) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (sym.empty())
            out += a.get_str();
        else if (a == 1)
            out += sym;
        else
            out += a.get_str() + "*" + sym;
        return out;
    };
    std::string out;
    bool first = true;
    if (is_gaussian()) {
        if (sgn(c_[0]) != 0) {
            out += term(c_[0], "", first);
            first = false;
        }
        if (sgn(c_[4]) != 0) out += term(c_[4], "i", first);
        return out;
    }
    for (int k = 0; k < D; ++k) {
        if (sgn(c_[k]) == 0) continue;
        std::string sym = k == 0 ? "" : (k == 1 ? "eta" : "eta^" + std::to_string(k));
        out += term(c_[k], sym, first);
        first = false;
    }
    return out;
}

std::complex<double> CycNum::approx() const {
    std::complex<double> r = 0, e = 1;
    const std::complex<double> step = std::polar(1.0, M_PI / 8);
    for (const auto& q : c_) {
        r += q.get_d() * e;
        e *= step;
    }
    return r;
}

namespace {

// Rational enclosure [lo, hi] of sqrt(x) for x >= 0 given as [xlo, xhi], width about 2^-bits.
std::pair<mpq_class, mpq_class> sqrt_enclosure(const mpq_class& xlo, const mpq_class& xhi, unsigned bits) {
    mpz_class scale = mpz_class(1) << (2 * bits);
    mpz_class lo_n = mpz_class(xlo * scale), hi_n;
    mpq_class hs = xhi * scale;
    mpz_cdiv_q(hi_n.get_mpz_t(), hs.get_num_mpz_t(), hs.get_den_mpz_t());
    if (lo_n < 0) lo_n = 0;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), lo_n.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), hi_n.get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    return {mpq_class(a, den), mpq_class(b + 1, den)};
}

}  // namespace

int CycNum::sign() const {
    if (!is_real()) throw MathError("sign of a non-real number");
    if (is_zero()) return 0;
    // Real part as sum c_k cos(k pi/8); refine interval enclosures until 0 is excluded.
    for (unsigned bits = 32;; bits *= 2) {
        auto s2 = sqrt_enclosure(2, 2, bits);
        auto c1 = sqrt_enclosure(2 + s2.first, 2 + s2.second, bits);   // 2cos(pi/8)
        auto c3 = sqrt_enclosure(2 - s2.second, 2 - s2.first, bits);   // 2cos(3pi/8)
        // cos(k pi/8) enclosures, k = 0..7
        std::array<std::pair<mpq_class, mpq_class>, 8> cs = {{
            {1, 1},
            {c1.first / 2, c1.second / 2},
            {s2.first / 2, s2.second / 2},
            {c3.first / 2, c3.second / 2},
            {0, 0},
            {-c3.second / 2, -c3.first / 2},
            {-s2.second / 2, -s2.first / 2},
            {-c1.second / 2, -c1.first / 2},
        }};
        mpq_class lo = 0, hi = 0;
        for (int k = 0; k < 8; ++k) {
            const mpq_class& q = c_[k];
            if (q >= 0) {
                lo += q * cs[k].first;
                hi += q * cs[k].second;
            } else {
                lo += q * cs[k].second;
                hi += q * cs[k].first;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (bits > 1u << 16) throw MathError("sign undecided");
    }
}

std::size_t CycNum::hash() const {
    std::size_t h = 0;
    for (const auto& q : c_) {
        hash_combine(h, std::hash<long>{}(mpz_get_si(q.get_num_mpz_t())));
        hash_combine(h, std::hash<long>{}(mpz_get_si(q.get_den_mpz_t())));
    }
    return h;
}

}  // namespace rebit
