#include "rebit/mixedorbits.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rebit/invariants.hpp"
#include "rebit/lie.hpp"

namespace rebit {

// ---------------------------------------------------------------------------
// Tensor expressions

namespace {

struct Value {
    bool tensor = false;
    CycNum s;
    Tensor t;
};

class TensorParser {
public:
    explicit TensorParser(std::string s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    Tensor run() {
        if (s_.empty()) throw ParseError("empty tensor expression");
        Value v = expr();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        if (!v.tensor) {
            if (v.s.is_zero()) return Tensor{};
            fail("scalar where a tensor was expected");
        }
        return v.t;
    }

private:
    [[noreturn]] void fail(const std::string& m) const {
        throw ParseError("tensor \"" + s_ + "\": " + m + " at position " + std::to_string(p_));
    }
    bool eat(char c) {
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    static Value add(const Value& a, const Value& b, int sign) {
        if (a.tensor != b.tensor) {
            // 0 is allowed on either side
            if (!a.tensor && a.s.is_zero()) return sign > 0 ? b : Value{b.tensor, -b.s, -b.t};
            if (!b.tensor && b.s.is_zero()) return a;
            throw ParseError("sum of a scalar and a tensor");
        }
        Value r = a;
        if (a.tensor) r.t = sign > 0 ? a.t + b.t : a.t - b.t;
        else r.s = sign > 0 ? a.s + b.s : a.s - b.s;
        return r;
    }
    static Value mul(const Value& a, const Value& b) {
        if (a.tensor && b.tensor) throw ParseError("product of two tensors");
        if (a.tensor) return {true, {}, a.t.scaled(b.s)};
        if (b.tensor) return {true, {}, b.t.scaled(a.s)};
        return {false, a.s * b.s, {}};
    }

    Value expr() {
        Value v;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (eat('-')) sign = -1;
            else if (!eat('+') && !first) break;
            Value t = term();
            v = first && sign > 0 ? t : add(v, t, sign);
            first = false;
        }
        return v;
    }
    Value term() {
        Value v = factor();
        for (;;) {
            if (eat('*')) v = mul(v, factor());
            else if (eat('/')) {
                Value d = factor();
                if (d.tensor || d.s.is_zero()) fail("bad divisor");
                v = mul(v, Value{false, d.s.inv(), {}});
            } else break;
        }
        return v;
    }
    Value factor() {
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            Value v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (c == '-') {
            ++p_;
            Value v = factor();
            return mul(Value{false, CycNum(-1), {}}, v);
        }
        if (c == 'i') {
            ++p_;
            return {false, CycNum::i(), {}};
        }
        if (c == 'e') {
            ++p_;
            std::string bits;
            while (p_ < s_.size() && (s_[p_] == '0' || s_[p_] == '1') && bits.size() < 4) bits += s_[p_++];
            if (bits.size() != 4 || (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))))
                fail("basis tensor needs four binary digits");
            return {true, {}, Tensor::basis(bits)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) num += s_[p_++];
            return {false, CycNum(parse_rational(num)), {}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t p_ = 0;
};

std::string tag3(int i, int j, int r) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + ")";
}
std::string tag4(int i, int j, int r, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + "," + std::to_string(k) + ")";
}

LieElt lie_of(const Vec& v) {
    LieElt x = lie_zero();
    std::copy(v.begin(), v.end(), x.begin());
    return x;
}

Vec vec_of(const Tensor& t) { return Vec(t.t.begin(), t.t.end()); }

}  // namespace

Tensor parse_tensor(const std::string& s) { return TensorParser(s).run(); }

// ---------------------------------------------------------------------------
// sl2-triples

std::vector<std::string> check_triple(const Tensor& p, const Sl2Triple& t) {
    std::vector<std::string> out;
    LieElt P = from_tensor(p), H = from_g0(t.h), E = from_tensor(t.e), F = from_tensor(t.f);
    if (bracket(H, E) != scaled(E, CycNum(2))) out.push_back("[h,e] != 2e");
    if (bracket(H, F) != scaled(F, CycNum(-2))) out.push_back("[h,f] != -2f");
    if (bracket(E, F) != H) out.push_back("[e,f] != h");
    if (!lie_is_zero(bracket(P, H))) out.push_back("[p,h] != 0");
    if (!lie_is_zero(bracket(P, E))) out.push_back("[p,e] != 0");
    if (!lie_is_zero(bracket(P, F))) out.push_back("[p,f] != 0");
    return out;
}

Sl2Triple sl2_complete(const Tensor& p, const Tensor& e) {
    if (e.is_zero()) throw MathError("e = 0 lies in no sl2-triple");
    LieElt P = from_tensor(p), E = from_tensor(e);
    if (!is_nilpotent(E)) throw MathError("e is not nilpotent");
    if (!lie_is_zero(bracket(P, E))) throw MathError("e does not commute with p");
    auto Y = centralizer_g1(P);
    const int d = static_cast<int>(Y.size());
    std::vector<LieElt> Hk(d);
    Matrix A(kDim, d);
    for (int k = 0; k < d; ++k) {
        Hk[k] = bracket(E, from_tensor(Y[k]));
        LieElt a = bracket(Hk[k], E);
        for (int r = 0; r < kDim; ++r) A(r, k) = a[r];
    }
    LieElt two_e = scaled(E, CycNum(2));
    auto c = A.solve(Vec(two_e.begin(), two_e.end()));
    if (!c) throw MathError("Jacobson-Morozov failure: no h");
    LieElt H = lie_zero();
    for (int k = 0; k < d; ++k)
        if (!(*c)[k].is_zero()) H = H + scaled(Hk[k], (*c)[k]);
    Matrix B(2 * kDim, d);
    Vec rhs(2 * kDim);
    for (int k = 0; k < d; ++k) {
        LieElt y = from_tensor(Y[k]);
        LieElt b = bracket(H, y) + scaled(y, CycNum(2));
        for (int r = 0; r < kDim; ++r) {
            B(r, k) = Hk[k][r];
            B(kDim + r, k) = b[r];
        }
    }
    for (int r = 0; r < kDim; ++r) rhs[r] = H[r];
    auto f = B.solve(rhs);
    if (!f) throw MathError("Jacobson-Morozov failure: no f");
    Sl2Triple t;
    t.e = e;
    for (int k = 0; k < d; ++k) t.f = t.f + Y[k].scaled((*f)[k]);
    t.h = to_graded(H).x0;
    auto bad = check_triple(p, t);
    if (!bad.empty()) throw MathError("Jacobson-Morozov failure: " + bad.front());
    return t;
}

// ---------------------------------------------------------------------------
// Blocks and rows

namespace {

const CartanSpace& space_named(char name) {
    for (const auto& c : cartan_spaces())
        if (c.name == name) return c;
    throw MathError(std::string("unknown Cartan basis '") + name + "'");
}

const std::vector<std::string>& block_params(const MixedBlock& b) { return ss_case(b.from ? b.from : b.i).params; }

const std::string& ss_text(const MixedBlock& b, int k) {
    auto it = b.ss_amended.find(k);
    return it != b.ss_amended.end() ? it->second : b.ss.at(k - 1);
}
const std::string& nil_text(const MixedBlock& b, int k) {
    auto it = b.nil_amended.find(k);
    return it != b.nil_amended.end() ? it->second : b.nil.at(k - 1);
}

// Affine map lambda -> semisimple part of row k: constant term and one column per parameter.
struct AffineRow {
    Tensor c0;
    std::vector<Tensor> cols;
    Tensor eval(const std::vector<CycNum>& lam) const {
        Tensor t = c0;
        for (std::size_t p = 0; p < cols.size(); ++p) t = t + cols[p].scaled(lam.at(p));
        return t;
    }
};

AffineRow affine_row(const MixedBlock& b, int k) {
    const auto& params = block_params(b);
    auto forms = parse_row(ss_text(b, k), params);
    if (forms.size() != 4) throw ParseError("mixed row " + tag4(b.i, b.j, b.r, k) + " needs 4 entries");
    const auto& basis = space_named(b.basis).basis;
    AffineRow a;
    a.cols.assign(params.size(), Tensor{});
    for (int c = 0; c < 4; ++c) {
        a.c0 = a.c0 + basis[c].scaled(forms[c].c0);
        for (std::size_t p = 0; p < params.size() && p < forms[c].c.size(); ++p)
            a.cols[p] = a.cols[p] + basis[c].scaled(forms[c].c[p]);
    }
    a.c0 = permute(b.perm, a.c0);
    for (auto& t : a.cols) t = permute(b.perm, t);
    return a;
}

Tensor row_nil(const MixedBlock& b, int k) { return permute(b.perm, parse_tensor(nil_text(b, k))); }

// Ranks of the powers of the 8x8 matrix of x (Jordan type of a nilpotent element).
std::vector<int> power_ranks(const Tensor& x) {
    Matrix m = to_matrix(from_tensor(x));
    Matrix p = m;
    std::vector<int> out;
    for (int k = 1; k <= 8; ++k) {
        int r = p.rank();
        out.push_back(r);
        if (r == 0) break;
        p = p * m;
    }
    return out;
}

struct Signature {
    InvariantVector inv;
    int zdim = 0;
    std::vector<int> nil_ranks;
    bool operator==(const Signature& o) const { return inv == o.inv && zdim == o.zdim && nil_ranks == o.nil_ranks; }
};

Signature signature(const Tensor& s, const Tensor& n) {
    return {invariants_of(s), centralizer_dim(from_tensor(s + n)), power_ranks(n)};
}

std::string show_sig(const Signature& g) {
    std::string r;
    for (int x : g.nil_ranks) r += (r.empty() ? "" : ",") + std::to_string(x);
    return "zdim " + std::to_string(g.zdim) + ", ranks (" + r + "), H " + g.inv.H.pretty();
}

GElt G(const char* s) { return GElt::parse_names(s); }

std::vector<GElt> parse_list(std::initializer_list<const char*> xs) {
    std::vector<GElt> out;
    for (auto x : xs) out.push_back(G(x));
    return out;
}

const std::vector<GElt>& h1_list(const std::string& ref) {
    static const std::map<std::string, std::vector<GElt>> lists = [] {
        std::map<std::string, std::vector<GElt>> m;
        std::vector<GElt> base = parse_list({"(I,I,I,I)", "(-I,-I,I,I)", "(-I,I,-I,I)", "(-I,I,I,-I)"});
        auto ext = [&](std::initializer_list<const char*> xs) {
            auto v = base;
            for (auto& g : parse_list(xs)) v.push_back(g);
            return v;
        };
        m["H1Z"] = ext({"(L,L,L,L)", "(L,L,-L,-L)", "(-L,L,-L,L)", "(L,-L,-L,L)"});
        m["H1Z32"] = ext({"(I,-I,-I,I)", "(I,-I,I,-I)", "(I,I,-I,-I)", "(-I,-I,-I,-I)"});
        m["H1Z43"] = base;
        m["H1Z74"] = ext({"(-L,L,K,K)", "(L,-L,K,K)", "(L,L,-K,K)", "(L,L,K,-K)"});
        m["H1Z75"] = ext({"(K,K,-L,L)", "(-K,-K,-L,L)", "(-K,K,L,L)", "(-K,K,-L,-L)"});
        m["H1Z105"] = parse_list({"(I,I,I,I)", "(-I,-I,I,I)"});
        m["H1Z1013"] = parse_list({"(I,I,I,I)", "(-I,I,-I,I)"});
        m["H1ZnoS75"] = parse_list({"(I,I,I,I)", "(-I,I,-I,I)", "(-I,I,I,-I)", "(I,I,-I,-I)", "(K,K,L,L)",
                                    "(-K,K,-L,L)", "(-K,K,L,-L)", "(K,K,-L,-L)"});
        return m;
    }();
    return lists.at(ref);
}

// Stabilizers Z(p, h, n_{i,r}, f) for i in {2, 3, 4, 7, 10}, one per r.
QuadrupleStabilizer native_stabilizer(int i, int r) {
    const std::string tag = "Zq" + std::to_string(i) + "," + std::to_string(r);
    auto fin = [&](std::initializer_list<const char*> gens, const char* ref) {
        return QuadrupleStabilizer{finite_centralizer(tag, parse_list(gens)), h1_list(ref), ref};
    };
    auto tor = [&](std::array<std::vector<int>, 4> exps, std::initializer_list<const char*> gens, const char* ref) {
        return QuadrupleStabilizer{torus_centralizer(tag, exps, parse_list(gens)), h1_list(ref), ref};
    };
    const auto gZ = {"(-I,-I,I,I)", "(-I,I,-I,I)", "(-L,-L,L,L)"};
    const auto gZ32 = {"(-I,-I,I,I)", "(-I,I,-I,I)", "(-I,-I,-I,-I)"};
    const auto g2 = {"(-I,-I,I,I)", "(-I,I,-I,I)"};
    auto key = std::make_pair(i, r);
    using P = std::pair<int, int>;
    const std::set<P> z = {{2, 1}, {3, 1}, {4, 1}, {4, 2}, {10, 1}, {10, 3}, {10, 7}, {10, 9}};
    const std::set<P> z32 = {{3, 2}, {7, 1}, {7, 2}, {7, 3}};
    const std::set<P> t43a = {{4, 3}, {7, 6}, {10, 4}, {10, 6}};
    const std::set<P> t43b = {{4, 4}, {10, 10}, {10, 12}};
    const std::set<P> t43c = {{10, 2}, {10, 8}};
    if (z.count(key)) return fin(gZ, "H1Z");
    if (z32.count(key)) return fin(gZ32, "H1Z32");
    if (t43a.count(key)) return tor({{{-1}, {1}, {-1}, {1}}}, g2, "H1Z43");
    if (t43b.count(key)) return tor({{{1}, {-1}, {-1}, {1}}}, g2, "H1Z43");
    if (t43c.count(key)) return tor({{{-1}, {-1}, {1}, {1}}}, g2, "H1Z43");
    if (key == P{7, 4}) return tor({{{0}, {0}, {-1}, {1}}}, {"(-I,-I,I,I)", "(-I,I,-I,I)", "(-L,L,-J,J)"}, "H1Z74");
    if (key == P{7, 5}) return tor({{{-1}, {1}, {0}, {0}}}, {"(-I,-I,I,I)", "(-I,I,-I,I)", "(-J,J,-L,L)"}, "H1Z75");
    if (key == P{10, 5}) return tor({{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}}, {"(-I,-I,I,I)"}, "H1Z105");
    if (key == P{10, 11}) return tor({{{0, -1}, {-1, 0}, {0, 1}, {1, 0}}}, {"(-I,-I,I,I)"}, "H1Z105");
    if (key == P{10, 13}) return tor({{{0, -1}, {0, 1}, {-1, 0}, {1, 0}}}, {"(-I,I,-I,I)"}, "H1Z1013");
    throw MathError("no stabilizer for (" + std::to_string(i) + "," + std::to_string(r) + ")");
}

QuadrupleStabilizer permuted(const QuadrupleStabilizer& q, const std::array<int, 4>& perm, int i, int r) {
    QuadrupleStabilizer out = q;
    out.spec.tag = "Zq" + std::to_string(i) + "," + std::to_string(r);
    for (int k = 0; k < 4; ++k) out.spec.exps[k] = q.spec.exps[perm[k]];
    for (auto& g : out.spec.finite_gens) g = permute(perm, g);
    for (auto& g : out.h1) g = permute(perm, g);
    return out;
}

QuadrupleStabilizer table_stabilizer(int i, int r) {
    if (i == 5 || i == 6) return permuted(native_stabilizer(4, r), i == 5 ? perm_23() : perm_24(), i, r);
    if (i == 8 || i == 9) return permuted(native_stabilizer(7, r), i == 8 ? perm_23() : perm_24(), i, r);
    return native_stabilizer(i, r);
}

bool special_block(int i, int j, int r) { return (i == 4 && j == 4 && r == 1) || (i == 7 && j == 2 && r == 5); }

std::vector<CycNum> table_sample(int i) { return sample_parameters(i, 1)[0]; }

}  // namespace

QuadrupleStabilizer quadruple_stabilizer(int i, int j, int r) {
    if (i == 4 && j == 4 && r == 1)
        return {finite_centralizer("Zq4,4,1", parse_list({"(-I,-I,I,I)", "(-I,I,-I,I)", "(K,K,J,J)"})),
                h1_list("H1Z43"), "H1Z43"};
    if (i == 7 && j == 2 && r == 5)
        return {torus_centralizer("Zq7,2,5", {{{-1}, {1}, {0}, {0}}},
                                  parse_list({"(-I,I,-I,I)", "(-I,I,I,-I)", "(-J,J,L,L)"})),
                h1_list("H1ZnoS75"), "H1ZnoS75"};
    return table_stabilizer(i, nilpotent_source(i, j, r));
}

std::vector<CycNum> mixed_sample(int i, int j) { return sample_parameters(i, j)[0]; }

std::vector<MixedRep> quadruple_reps(int i, int j, int r, const std::vector<CycNum>& lam) {
    const auto& b = mixed_block(i, j, r);
    std::vector<MixedRep> out;
    for (int k = 1; k <= b.row_count(); ++k) out.push_back({k, affine_row(b, k).eval(lam), row_nil(b, k)});
    return out;
}

std::vector<MixedRep> quadruple_reps(int i, int j, int r) { return quadruple_reps(i, j, r, mixed_sample(i, j)); }

Quadruple canonical_quadruple(int i, int j, int r) {
    auto reps = quadruple_reps(i, j, r);
    return {reps.front().s, sl2_complete(reps.front().s, reps.front().n)};
}

CentralizerCheck verify_centralizer(int i, int j, int r) {
    auto st = quadruple_stabilizer(i, j, r);
    if (special_block(i, j, r)) {
        auto q = canonical_quadruple(i, j, r);
        return check_centralizer(st.spec, {q.p, q.t.e, q.t.f}, {q.t.h});
    }
    // the stabilizer is stated for the complex quadruple (p, n_{i,r'}) with p in the canonical family
    Tensor p = h_elt(family_point(i, table_sample(i)));
    Tensor e = nilpotent_n(i, nilpotent_source(i, j, r));
    auto t = sl2_complete(p, e);
    return check_centralizer(st.spec, {p, t.e, t.f}, {t.h});
}

// ---------------------------------------------------------------------------
// mu-twist

Tensor mu_apply(const GElt& n, const Tensor& x) { return act(n, x.conj()); }

MuSpace u_p_mu_fixed(const Tensor& p, const GElt& n) {
    auto B = centralizer_g1(from_tensor(p));
    MuSpace ms;
    ms.complex_dim = static_cast<int>(B.size());
    std::vector<Vec> span;
    for (const auto& b : B) span.push_back(vec_of(b));
    const GElt nn = n * n.conj();
    for (const auto& b : B) {
        auto with = span;
        with.push_back(vec_of(mu_apply(n, b)));
        if (rank_of(with) != ms.complex_dim) throw MathError("not a valid twist: mu does not preserve U_p");
        if (act(nn, b) != b) throw MathError("not a valid twist: mu^2 != 1 on U_p");
    }
    std::vector<Vec> acc;
    for (const auto& b : B)
        for (const Tensor& x : {b, b.scaled(CycNum::i())}) {
            Tensor w = x + mu_apply(n, x);
            if (w.is_zero()) continue;
            acc.push_back(vec_of(w));
            if (rank_of(acc) == static_cast<int>(acc.size())) ms.fixed_basis.push_back(w);
            else acc.pop_back();
        }
    // independent mu-fixed vectors over R are independent over C
    ms.real_dim = static_cast<int>(ms.fixed_basis.size());
    return ms;
}

namespace {

// Real subspace {x in span(e_m : m in S) : mu(x) = x}; each basis vector as a tensor.
std::vector<Tensor> mu_fixed_on_support(const GElt& n, int mask) {
    std::vector<int> S;
    for (int m = 0; m < 16; ++m)
        if (mask >> m & 1) S.push_back(m);
    const int u = static_cast<int>(S.size());
    Matrix M(16, 2 * u);
    const CycNum I = CycNum::i();
    for (int c = 0; c < u; ++c) {
        Tensor em = Tensor::basis(S[c]);
        Tensor v = act(n, em);
        Tensor a = v - em;                                  // x_m = alpha real
        Tensor b = mu_apply(n, em.scaled(I)) - em.scaled(I);  // x_m = i beta
        for (int r = 0; r < 16; ++r) {
            M(r, c) = a.t[r];
            M(r, u + c) = b.t[r];
        }
    }
    Matrix R(32, 2 * u);
    const CycNum half(1, 2), hi = CycNum(1, 2) * I.inv();
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 2 * u; ++c) {
            R(r, c) = (M(r, c) + M(r, c).conj()) * half;
            R(16 + r, c) = (M(r, c) - M(r, c).conj()) * hi;
        }
    std::vector<Tensor> out;
    for (const auto& k : R.kernel()) {
        Tensor x;
        for (int c = 0; c < u; ++c) x.t[S[c]] = k[c] + k[u + c] * I;
        out.push_back(x);
    }
    return out;
}

}  // namespace

RealNilpotent find_real_nilpotent(int i, const HVec& q, const GElt& n, const Tensor& e) {
    using S = RealNilpotent::Status;
    RealNilpotent res;
    const Tensor p = h_elt(q);
    if (!lie_is_zero(bracket(from_tensor(p), from_tensor(e)))) throw MathError("e does not commute with p");
    auto fixed = [&](const Tensor& x) { return mu_apply(n, x) == x; };
    auto found = [&](const GElt& g, const Tensor& x, const std::string& how) {
        res.status = S::Found;
        res.x = x;
        res.conjugator = g;
        res.detail = how;
        return res;
    };
    if (fixed(e)) return found(GElt::identity(), e, "e is mu-fixed");
    const auto Z = semisimple_centralizer(i);
    const auto fin = Z.finite_part();
    auto check = [&](const GElt& g, const Tensor& x) {
        if (act(g, e) != x || !fixed(x) || act(g, p) != p) throw std::logic_error("real nilpotent witness check failed");
    };
    if (Z.kind == CentralizerSpec::Kind::Torus) {
        const int d = Z.dim;
        // weight of monomial m on the torus coordinate j
        std::array<std::vector<int>, 16> w;
        for (int m = 0; m < 16; ++m)
            for (int j = 0; j < d; ++j) {
                int s = 0;
                for (int k = 0; k < 4; ++k) {
                    int ex = j < static_cast<int>(Z.exps[k].size()) ? Z.exps[k][j] : 0;
                    s += ((m >> (3 - k)) & 1) ? -ex : ex;
                }
                w[m].push_back(s);
            }
        int total = 1;
        for (int j = 0; j < d; ++j) total *= 16;
        for (const auto& f : fin) {
            Tensor y = act(f, e);
            for (int code = 0; code < total; ++code) {
                std::vector<int> ks(d);
                for (int j = 0, c = code; j < d; ++j, c /= 16) ks[j] = c % 16;
                Tensor x;
                for (int m = 0; m < 16; ++m) {
                    if (y.t[m].is_zero()) continue;
                    int ex = 0;
                    for (int j = 0; j < d; ++j) ex += w[m][j] * ks[j];
                    x.t[m] = y.t[m] * CycNum::eta(((ex % 16) + 16) % 16);
                }
                if (!fixed(x)) continue;
                std::vector<CycNum> params;
                for (int j = 0; j < d; ++j) params.push_back(CycNum::eta(ks[j]));
                GElt g = Z.component_element(params) * f;
                check(g, x);
                return found(g, x, "torus twist");
            }
        }
        // exact decision when the torus acts on the support by independent characters
        bool all_refuted = true;
        std::string why;
        for (const auto& f : fin) {
            Tensor y = act(f, e);
            std::vector<Vec> rows;
            for (int m = 0; m < 16; ++m)
                if (!y.t[m].is_zero()) {
                    Vec r;
                    for (int j = 0; j < d; ++j) r.push_back(CycNum(w[m][j]));
                    rows.push_back(r);
                }
            if (rank_of(rows) != static_cast<int>(rows.size())) {
                all_refuted = false;
                why = "torus characters dependent on the support of " + f.pretty() + " e";
                continue;
            }
            const int mask = y.support_mask();
            auto W = mu_fixed_on_support(n, mask);
            bool covers = true;
            for (int m = 0; m < 16; ++m)
                if (mask >> m & 1) {
                    bool any = false;
                    for (const auto& x : W) any = any || !x.t[m].is_zero();
                    covers = covers && any;
                }
            if (covers) {
                all_refuted = false;
                why = "a real point exists in the torus orbit of " + f.pretty() + " e but no conjugator over Q(eta) was found";
            }
        }
        if (all_refuted) {
            res.status = S::NoRealPoint;
            res.detail = "for every component the mu-fixed vectors on the support vanish on some coordinate";
            return res;
        }
        res.status = S::Undecided;
        res.detail = why;
        return res;
    }
    if (Z.kind == CentralizerSpec::Kind::SL2) {
        std::vector<Mat2> opts;
        for (int k = 0; k < 16; ++k) {
            opts.push_back(mats::D(CycNum::eta(k)));
            opts.push_back(mats::D(CycNum::eta(k)) * mats::J());
        }
        const int d = Z.dim;
        int total = 1;
        for (int j = 0; j < d; ++j) total *= static_cast<int>(opts.size());
        for (const auto& f : fin) {
            Tensor y = act(f, e);
            for (int code = 0; code < total; ++code) {
                std::vector<CycNum> params;
                for (int j = 0, c = code; j < d; ++j, c /= static_cast<int>(opts.size())) {
                    const Mat2& m = opts[c % opts.size()];
                    params.insert(params.end(), {m.a, m.b, m.c, m.d});
                }
                GElt t = Z.component_element(params);
                Tensor x = act(t, y);
                if (!fixed(x)) continue;
                GElt g = t * f;
                check(g, x);
                return found(g, x, "sl2 factor twist");
            }
        }
        res.status = S::Undecided;
        res.detail = "no mu-fixed point among monomial elements of the SL(2) factors";
        return res;
    }
    for (const auto& f : fin) {
        Tensor x = act(f, e);
        if (fixed(x)) {
            check(f, x);
            return found(f, x, "finite centralizer element");
        }
    }
    res.status = S::NoRealPoint;
    res.detail = "finite centralizer: no element gives a mu-fixed point";
    return res;
}

// ---------------------------------------------------------------------------
// Verification

MixedReport verify_mixed_block(const MixedBlock& b) {
    MixedReport rep;
    const std::string bt = tag3(b.i, b.j, b.r);
    auto fail = [&](const std::string& m) { rep.failures.push_back(m); };
    std::vector<CycNum> lam;
    try {
        lam = mixed_sample(b.i, b.j);
    } catch (const MathError& e) {
        fail(bt + ": no sample parameters: " + e.what());
        return rep;
    }
    const int src = nilpotent_source(b.i, b.j, b.r);
    const Tensor q = h_elt(family_point(b.i, lam));
    Tensor nsrc;
    try {
        nsrc = nilpotent_n(b.i, src);
    } catch (const MathError& e) {
        fail(bt + ": " + e.what());
        return rep;
    }
    const Signature ref = signature(q, nsrc);
    for (int k = 1; k <= b.row_count(); ++k) {
        const std::string rt = tag4(b.i, b.j, b.r, k);
        ++rep.rows;
        Tensor s, n;
        try {
            s = affine_row(b, k).eval(lam);
            n = row_nil(b, k);
        } catch (const std::exception& e) {
            fail(rt + ": " + e.what());
            continue;
        }
        if (!s.is_real()) fail(rt + ": semisimple part is not real");
        if (!n.is_real()) fail(rt + ": nilpotent part is not real");
        if (!bracket(s, n).is_zero()) {
            fail(rt + ": parts do not commute");
            continue;
        }
        if (!is_semisimple(from_tensor(s))) fail(rt + ": semisimple part is not semisimple");
        if (n.is_zero() || !is_nilpotent(from_tensor(n))) {
            fail(rt + ": nilpotent part is not nilpotent");
            continue;
        }
        try {
            sl2_complete(s, n);
        } catch (const MathError& e) {
            fail(rt + ": " + e.what());
        }
        auto sig = signature(s, n);
        if (!(sig == ref))
            fail(rt + ": complex orbit differs from p + n_{" + std::to_string(b.i) + "," + std::to_string(src) +
                 "} (" + show_sig(sig) + " vs " + show_sig(ref) + ")");
    }
    // row 1 against the listed nilpotent element
    if (b.row_count() > 0) {
        Tensor n1 = row_nil(b, 1);
        std::optional<Tensor> listed;
        if (b.j == 1) listed = nilpotent_n(b.i, b.r);
        else if (auto x = nilpotent_nj(b.from ? b.from : b.i, b.j, b.r)) listed = permute(b.perm, *x);
        if (listed && *listed != n1)
            rep.notes.push_back(bt + ": row 1 nilpotent part " + n1.pretty() + " differs from the listed " +
                                listed->pretty());
    }
    if (!b.note.empty()) rep.notes.push_back(bt + ": " + b.note);
    return rep;
}

MixedReport verify_mixed_tables(int only_case) {
    MixedReport rep;
    auto merge = [&](const MixedReport& r) {
        rep.rows += r.rows;
        rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
        rep.notes.insert(rep.notes.end(), r.notes.begin(), r.notes.end());
    };
    for (const auto* b : mixed_blocks_of(only_case)) merge(verify_mixed_block(*b));
    // stabilizers: one check per (i, r) plus the special blocks
    for (int i = 2; i <= 10; ++i) {
        if (only_case && only_case != i) continue;
        for (int r = 1; r <= nilpotent_count(i); ++r) {
            const std::string t = "Z(" + std::to_string(i) + "," + std::to_string(r) + ")";
            try {
                auto st = table_stabilizer(i, r);
                auto c = verify_centralizer(i, 1, r);
                for (const auto& f : c.failures) rep.failures.push_back(t + ": " + f);
                if (c.lie_dim != st.spec.dim)
                    rep.failures.push_back(t + ": stabilizer Lie algebra has dimension " + std::to_string(c.lie_dim) +
                                           ", listed " + std::to_string(st.spec.dim));
                int rows = mixed_block(i, 1, r).row_count();
                auto cl = verify_class_list(st.spec, st.h1, rows);
                for (const auto& f : cl.failures) rep.failures.push_back(t + " classes: " + f);
            } catch (const std::exception& e) {
                rep.failures.push_back(t + ": " + e.what());
            }
        }
    }
    for (auto [i, j, r] : {std::array<int, 3>{4, 4, 1}, std::array<int, 3>{7, 2, 5}}) {
        if (only_case && only_case != i) continue;
        const std::string t = "Z" + tag3(i, j, r);
        try {
            auto st = quadruple_stabilizer(i, j, r);
            auto c = verify_centralizer(i, j, r);
            for (const auto& f : c.failures) rep.failures.push_back(t + ": " + f);
            if (c.lie_dim != st.spec.dim)
                rep.failures.push_back(t + ": stabilizer Lie algebra has dimension " + std::to_string(c.lie_dim) +
                                       ", listed " + std::to_string(st.spec.dim));
            auto cl = verify_class_list(st.spec, st.h1, i == 4 ? 4 : 8);
            for (const auto& f : cl.failures) rep.failures.push_back(t + " classes: " + f);
        } catch (const std::exception& e) {
            rep.failures.push_back(t + ": " + e.what());
        }
    }
    return rep;
}

MixedReport verify_nilpotent_elements() {
    MixedReport rep;
    auto fail = [&](const std::string& m) { rep.failures.push_back(m); };
    for (int i = 2; i <= 10; ++i) {
        Tensor q = h_elt(family_point(i, table_sample(i)));
        for (int r = 1; r <= nilpotent_count(i); ++r) {
            ++rep.rows;
            const std::string t = "n(" + std::to_string(i) + "," + std::to_string(r) + ")";
            Tensor n = nilpotent_n(i, r);
            if (!is_nilpotent(from_tensor(n))) fail(t + ": not nilpotent");
            if (!bracket(q, n).is_zero()) fail(t + ": does not commute with the family");
            if (i == 5 || i == 6 || i == 8 || i == 9) {
                int from = i <= 6 ? 4 : 7;
                const auto& perm = (i == 5 || i == 8) ? perm_23() : perm_24();
                if (permute(perm, nilpotent_n(from, r)) != n)
                    fail(t + ": not the slot permutation of n(" + std::to_string(from) + "," + std::to_string(r) + ")");
            }
        }
    }
    for (int i : {2, 3, 4, 7, 10})
        for (int j = 2; j <= 8; ++j)
            for (int r = 1; r <= nilpotent_count(i); ++r) {
                auto n = nilpotent_nj(i, j, r);
                if (!n) continue;
                ++rep.rows;
                const std::string t = "n" + tag3(i, j, r);
                if (!n->is_real()) fail(t + ": not real");
                if (!is_nilpotent(from_tensor(*n))) fail(t + ": not nilpotent");
                Tensor p;
                try {
                    p = quadruple_reps(i, j, r).front().s;
                } catch (const std::exception& e) {
                    fail(t + ": " + e.what());
                    continue;
                }
                if (!bracket(p, *n).is_zero()) {
                    fail(t + ": does not commute with its real point");
                    continue;
                }
                // pulled back to h, the element is fixed by the twist of its conjugator
                auto lam = mixed_sample(i, j);
                HVec qv = family_point(i, lam);
                auto g = cartan_conjugator(qv, p);
                if (!g) {
                    fail(t + ": real point not conjugate to the family point");
                    continue;
                }
                Tensor x = act(g->inv(), *n);
                if (mu_apply(coboundary(*g), x) != x) fail(t + ": not mu-fixed for its twist");
                int src = nilpotent_source(i, j, r);
                if (!(signature(h_elt(qv), x) == signature(h_elt(qv), nilpotent_n(i, src))))
                    fail(t + ": not in the complex orbit of n(" + std::to_string(i) + "," + std::to_string(src) + ")");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

// Is there g = T P in SL(2,R)^4 (P in {I,J}^4, T real diagonal) with g s = s and g n0 = n?
bool monomial_move(const Tensor& s, const Tensor& n0, const Tensor& n) {
    for (int code = 0; code < 16; ++code) {
        GElt P = GElt::identity();
        for (int k = 0; k < 4; ++k)
            if (code >> k & 1) P.f[k] = mats::J();
        Tensor ps = act(P, s), pn = act(P, n0);
        if (ps.support_mask() != s.support_mask() || pn.support_mask() != n.support_mask()) continue;
        // ratios c_m with prod_k t_k^{+-1} = c_m
        std::vector<std::pair<int, CycNum>> eqs;
        bool ok = true;
        for (int m = 0; m < 16 && ok; ++m) {
            if (!ps.t[m].is_zero()) eqs.emplace_back(m, s.t[m] / ps.t[m]);
            if (!pn.t[m].is_zero()) eqs.emplace_back(m, n.t[m] / pn.t[m]);
        }
        int sign0 = 0;
        for (auto& [m, c] : eqs) {
            if (!c.is_real()) {
                ok = false;
                break;
            }
            // every monomial has all four slots with exponent +-1: the sign is prod_k sign(t_k)
            int sg = c.sign();
            if (sign0 && sg != sign0) ok = false;
            sign0 = sg;
        }
        if (!ok) continue;
        // magnitudes: integer relations among the characters must hold for c^2
        Matrix E(static_cast<int>(eqs.size()), 4);
        for (std::size_t a = 0; a < eqs.size(); ++a)
            for (int k = 0; k < 4; ++k) E(static_cast<int>(a), k) = ((eqs[a].first >> (3 - k)) & 1) ? -1 : 1;
        for (const auto& v : E.transpose().kernel()) {
            // scale to integers
            mpz_class den = 1;
            for (const auto& x : v) den = lcm(den, x[0].get_den());
            CycNum prod(1);
            for (std::size_t a = 0; a < eqs.size(); ++a) {
                mpq_class e = v[a][0] * den;
                long ex = e.get_num().get_si();
                if (ex) prod *= (eqs[a].second * eqs[a].second).pow(ex);
            }
            if (!prod.is_one()) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

MixedLabel classify_mixed(const Tensor& t) {
    if (!t.is_real()) throw ClassifyError("not-real", "not a real state");
    auto jd = jordan_decompose(from_tensor(t));
    Tensor s = to_graded(jd.s).x1, n = to_graded(jd.n).x1;
    if (s.is_zero()) throw ClassifyError("nilpotent", "nilpotent: see prior classification");
    if (n.is_zero()) throw ClassifyError("semisimple", "semisimple: use the semisimple classification");
    MixedLabel lab;
    lab.semisimple = classify_semisimple(s);
    lab.i = lab.semisimple.i;
    lab.j = lab.semisimple.j;
    struct Match {
        int r, k;
        std::vector<CycNum> lam;
        bool canonical;
    };
    std::vector<Match> matches;
    for (const auto* b : mixed_blocks_of(lab.i)) {
        if (b->j != lab.j) continue;
        for (int k = 1; k <= b->row_count(); ++k) {
            auto a = affine_row(*b, k);
            const int np = static_cast<int>(a.cols.size());
            Matrix A(16, np);
            for (int m = 0; m < 16; ++m)
                for (int p = 0; p < np; ++p) A(m, p) = a.cols[p].t[m];
            Tensor rhs = s - a.c0;
            auto lam = A.solve(vec_of(rhs));
            if (!lam) continue;
            Tensor n0 = row_nil(*b, k);
            if (n0 != n && !monomial_move(s, n0, n)) continue;
            bool canonical = false;
            try {
                canonical = canonical_lambda(lab.i, lab.j, *lam) == *lam;
            } catch (const MathError&) {
            }
            matches.push_back({b->r, k, *lam, canonical});
        }
    }
    // a row read at another Gamma-image of lambda names a different row's class
    // at the canonical parameters; keep the canonical readings when there are any
    bool any_canonical = std::any_of(matches.begin(), matches.end(), [](const Match& m) { return m.canonical; });
    for (const auto& m : matches) {
        if (any_canonical && !m.canonical) continue;
        if (lab.same_orbit.empty()) {
            lab.r = m.r;
            lab.k = m.k;
            lab.lambda = m.lam;
        }
        lab.same_orbit.push_back({m.r, m.k});
    }
    if (lab.same_orbit.empty()) {
        auto inv = invariants_of(t);
        auto sig = signature(s, n);
        throw ClassifyError("nilpotent-pattern", "nilpotent pattern unrecognized (family " + std::to_string(lab.i) +
                                                     ", class " + std::to_string(lab.j) + "; " + show_sig(sig) +
                                                     ", L12 " + inv.L12.pretty() + ")");
    }
    return lab;
}

}  // namespace rebit
