#include "rebit/group.hpp"

#include <cctype>
#include <unordered_set>

namespace rebit {

Mat2 Mat2::inv() const {
    CycNum dt = det();
    if (dt.is_zero()) throw MathError("singular matrix");
    if (dt.is_one()) return {d, -b, -c, a};
    CycNum s = dt.inv();
    return {d * s, -b * s, -c * s, a * s};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

int Mat2::compare(const Mat2& x, const Mat2& y) {
    if (int r = CycNum::compare(x.a, y.a)) return r;
    if (int r = CycNum::compare(x.b, y.b)) return r;
    if (int r = CycNum::compare(x.c, y.c)) return r;
    return CycNum::compare(x.d, y.d);
}

std::size_t Mat2::hash() const {
    std::size_t h = a.hash();
    hash_combine(h, b.hash());
    hash_combine(h, c.hash());
    hash_combine(h, d.hash());
    return h;
}

std::string Mat2::pretty() const {
    return "[[" + a.pretty() + ", " + b.pretty() + "], [" + c.pretty() + ", " + d.pretty() + "]]";
}

namespace mats {
Mat2 I() { return Mat2::identity(); }
Mat2 J() { return {0, 1, -1, 0}; }
Mat2 K() { return {0, CycNum::i(), CycNum::i(), 0}; }
Mat2 L() { return {CycNum::i(), 0, 0, -CycNum::i()}; }
Mat2 M() { return {CycNum::eta(6), 0, 0, -CycNum::eta(2)}; }
Mat2 N() { return {CycNum::eta(2), 0, 0, -CycNum::eta(6)}; }
Mat2 F() { return {CycNum(1, 2), CycNum::i() * CycNum(1, 2), CycNum::i(), 1}; }
Mat2 D(const CycNum& u) { return {u, 0, 0, u.inv()}; }
Mat2 sharp(const Mat2& m) { return {m.d, m.c, m.b, m.a}; }

namespace {
CycNum parse_scalar(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t.erase(0, 1);
    }
    CycNum base;
    std::string name = t;
    long e = 1;
    auto caret = t.find('^');
    if (caret != std::string::npos) {
        name = t.substr(0, caret);
        e = std::stol(t.substr(caret + 1));
    }
    if (name == "eta")
        base = CycNum::eta(1);
    else if (name == "zeta")
        base = CycNum::zeta();
    else if (name == "i")
        base = CycNum::i();
    else
        base = CycNum(parse_rational(name));
    CycNum r = base.pow(e);
    return neg ? -r : r;
}
}  // namespace

Mat2 by_name(const std::string& name0) {
    std::string name;
    for (char ch : name0)
        if (!isspace(static_cast<unsigned char>(ch))) name += ch;
    std::size_t p = 0;
    bool neg = false;
    if (p < name.size() && name[p] == '-') {
        neg = true;
        ++p;
    }
    if (p >= name.size()) throw ParseError("empty matrix name");
    Mat2 r = I();
    while (p < name.size()) {
        char ch = name[p];
        Mat2 m;
        if (ch == 'D') {
            if (p + 1 >= name.size() || name[p + 1] != '(') throw ParseError("bad matrix name " + name0);
            auto close = name.find(')', p);
            if (close == std::string::npos) throw ParseError("bad matrix name " + name0);
            m = D(parse_scalar(name.substr(p + 2, close - p - 2)));
            p = close + 1;
        } else {
            switch (ch) {
                case 'I': m = I(); break;
                case 'J': m = J(); break;
                case 'K': m = K(); break;
                case 'L': m = L(); break;
                case 'M': m = M(); break;
                case 'N': m = N(); break;
                case 'F': m = F(); break;
                default: throw ParseError("bad matrix name " + name0);
            }
            ++p;
        }
        r = r * m;
    }
    return neg ? -r : r;
}
}  // namespace mats

GElt GElt::operator*(const GElt& o) const {
    return {{f[0] * o.f[0], f[1] * o.f[1], f[2] * o.f[2], f[3] * o.f[3]}};
}

GElt GElt::inv() const { return {{f[0].inv(), f[1].inv(), f[2].inv(), f[3].inv()}}; }

GElt GElt::conj() const { return {{f[0].conj(), f[1].conj(), f[2].conj(), f[3].conj()}}; }

bool GElt::is_identity() const {
    for (const auto& m : f)
        if (m != Mat2::identity()) return false;
    return true;
}

bool GElt::in_sl2() const {
    for (const auto& m : f)
        if (!m.det().is_one()) return false;
    return true;
}

int GElt::compare(const GElt& x, const GElt& y) {
    for (int k = 0; k < 4; ++k)
        if (int r = Mat2::compare(x.f[k], y.f[k])) return r;
    return 0;
}

std::size_t GElt::hash() const {
    std::size_t h = 0;
    for (const auto& m : f) hash_combine(h, m.hash());
    return h;
}

std::string GElt::pretty() const {
    std::string s = "(";
    for (int k = 0; k < 4; ++k) {
        if (k) s += ", ";
        s += f[k].pretty();
    }
    return s + ")";
}

GElt GElt::parse_names(const std::string& s0) {
    std::string s;
    for (char ch : s0)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("bad group element " + s0);
    s = s.substr(1, s.size() - 2);
    GElt g;
    int k = 0, depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            if (k >= 4) throw ParseError("bad group element " + s0);
            g.f[k++] = mats::by_name(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (k != 3) throw ParseError("bad group element " + s0);
    g.f[3] = mats::by_name(cur);
    return g;
}

std::vector<GElt> generate_group(const std::vector<GElt>& gens, std::size_t limit) {
    std::vector<GElt> elts{GElt::identity()};
    std::unordered_set<GElt, GEltHash> seen{GElt::identity()};
    for (std::size_t k = 0; k < elts.size(); ++k)
        for (const auto& g : gens) {
            GElt x = elts[k] * g;
            if (!seen.insert(x).second) continue;
            elts.push_back(std::move(x));
            if (elts.size() > limit) throw MathError("group generation exceeded the size limit");
        }
    return elts;
}

GElt coboundary(const GElt& g) { return g.inv() * g.conj(); }

GElt random_real_element(std::mt19937_64& rng, int bound, int steps) {
    std::uniform_int_distribution<int> d(-bound, bound);
    GElt g = GElt::identity();
    for (auto& m : g.f)
        for (int s = 0; s < steps; ++s) {
            m = m * Mat2{1, d(rng), 0, 1};
            m = m * Mat2{1, 0, d(rng), 1};
        }
    return g;
}

Tensor Tensor::basis(int idx) {
    Tensor x;
    x.t[idx] = 1;
    return x;
}

int Tensor::index(const std::string& bits) {
    if (bits.size() != 4) throw ParseError("bad tensor index '" + bits + "'");
    int idx = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw ParseError("bad tensor index '" + bits + "'");
        idx = 2 * idx + (ch - '0');
    }
    return idx;
}

std::string Tensor::bits(int idx) {
    std::string s(4, '0');
    for (int k = 0; k < 4; ++k) s[k] = static_cast<char>('0' + ((idx >> (3 - k)) & 1));
    return s;
}

Tensor Tensor::basis(const std::string& bits) { return basis(index(bits)); }

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor r = *this;
    for (int k = 0; k < 16; ++k) r.t[k] += o.t[k];
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor r = *this;
    for (int k = 0; k < 16; ++k) r.t[k] -= o.t[k];
    return r;
}

Tensor Tensor::operator-() const {
    Tensor r;
    for (int k = 0; k < 16; ++k) r.t[k] = -t[k];
    return r;
}

Tensor Tensor::scaled(const CycNum& s) const {
    Tensor r;
    for (int k = 0; k < 16; ++k)
        if (!t[k].is_zero()) r.t[k] = t[k] * s;
    return r;
}

Tensor Tensor::conj() const {
    Tensor r;
    for (int k = 0; k < 16; ++k) r.t[k] = t[k].conj();
    return r;
}

bool Tensor::is_zero() const {
    for (const auto& x : t)
        if (!x.is_zero()) return false;
    return true;
}

int Tensor::support_mask() const {
    int m = 0;
    for (int k = 0; k < 16; ++k)
        if (!t[k].is_zero()) m |= 1 << k;
    return m;
}

std::string Tensor::pretty() const {
    std::string s;
    for (int k = 0; k < 16; ++k) {
        if (t[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = t[k].pretty();
        if (c == "1")
            s += "e" + bits(k);
        else
            s += "(" + c + ")*e" + bits(k);
    }
    return s.empty() ? "0" : s;
}

G0Elt G0Elt::operator+(const G0Elt& o) const {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = x[k] + o.x[k];
    return r;
}

G0Elt G0Elt::operator-(const G0Elt& o) const {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = x[k] - o.x[k];
    return r;
}

G0Elt G0Elt::scaled(const CycNum& s) const {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = x[k].scaled(s);
    return r;
}

bool G0Elt::is_zero() const {
    for (const auto& m : x)
        if (!m.is_zero()) return false;
    return true;
}

std::array<CycNum, 12> G0Elt::coords() const {
    std::array<CycNum, 12> c;
    for (int k = 0; k < 4; ++k) {
        c[3 * k] = x[k].a;
        c[3 * k + 1] = x[k].b;
        c[3 * k + 2] = x[k].c;
    }
    return c;
}

G0Elt G0Elt::from_coords(const std::array<CycNum, 12>& c) {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = {c[3 * k], c[3 * k + 1], c[3 * k + 2], -c[3 * k]};
    return r;
}

G0Elt G0Elt::basis(int k) {
    std::array<CycNum, 12> c;
    c[k] = 1;
    return from_coords(c);
}

G0Elt bracket(const G0Elt& x, const G0Elt& y) {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = x.x[k] * y.x[k] - y.x[k] * x.x[k];
    return r;
}

Tensor act_slot(int slot, const Mat2& m, const Tensor& x) {
    Tensor r;
    int bit = 3 - slot;
    for (int idx = 0; idx < 16; ++idx) {
        if (idx & (1 << bit)) continue;
        int i0 = idx, i1 = idx | (1 << bit);
        const CycNum &x0 = x.t[i0], &x1 = x.t[i1];
        if (x0.is_zero() && x1.is_zero()) continue;
        if (!x0.is_zero()) {
            if (!m.a.is_zero()) r.t[i0] += m.a * x0;
            if (!m.c.is_zero()) r.t[i1] += m.c * x0;
        }
        if (!x1.is_zero()) {
            if (!m.b.is_zero()) r.t[i0] += m.b * x1;
            if (!m.d.is_zero()) r.t[i1] += m.d * x1;
        }
    }
    return r;
}

Tensor act(const GElt& g, const Tensor& x) {
    Tensor r = x;
    for (int k = 0; k < 4; ++k)
        if (g.f[k] != Mat2::identity()) r = act_slot(k, g.f[k], r);
    return r;
}

Tensor act(const G0Elt& x, const Tensor& v) {
    Tensor r;
    for (int k = 0; k < 4; ++k)
        if (!x.x[k].is_zero()) r = r + act_slot(k, x.x[k], v);
    return r;
}

G0Elt act(const GElt& g, const G0Elt& x) {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = g.f[k] * x.x[k] * g.f[k].inv();
    return r;
}

Tensor permute(const std::array<int, 4>& perm, const Tensor& x) {
    Tensor r;
    for (int idx = 0; idx < 16; ++idx) {
        int src = 0;
        for (int k = 0; k < 4; ++k) {
            int b = (idx >> (3 - k)) & 1;
            src |= b << (3 - perm[k]);
        }
        // result bit at slot k equals source bit at slot perm[k]
        r.t[idx] = x.t[src];
    }
    return r;
}

GElt permute(const std::array<int, 4>& perm, const GElt& g) {
    GElt r;
    for (int k = 0; k < 4; ++k) r.f[k] = g.f[perm[k]];
    return r;
}

G0Elt permute(const std::array<int, 4>& perm, const G0Elt& x) {
    G0Elt r;
    for (int k = 0; k < 4; ++k) r.x[k] = x.x[perm[k]];
    return r;
}

}  // namespace rebit
