#include "rebit/ssorbits.hpp"

#include <algorithm>
#include <cctype>

#include "rebit/lie.hpp"

namespace rebit {

// ---------------------------------------------------------------------------
// Row expressions

CycNum LinExpr::eval(const std::vector<CycNum>& lam) const {
    CycNum r = c0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) r += c[k] * lam.at(k);
    return r;
}

namespace {

class RowParser {
public:
    RowParser(const std::string& s, const std::vector<std::string>& params) : s_(s), params_(params) {}

    std::vector<LinExpr> run() {
        auto v = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return v;
    }

private:
    using Val = std::vector<LinExpr>;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("row \"" + s_ + "\": " + msg);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char ch) {
        skip();
        if (p_ < s_.size() && s_[p_] == ch) {
            ++p_;
            return true;
        }
        return false;
    }
    LinExpr constant(const CycNum& a) const { return {a, std::vector<CycNum>(params_.size())}; }
    static bool is_const(const Val& v) {
        for (const auto& e : v)
            for (const auto& x : e.c)
                if (!x.is_zero()) return false;
        return true;
    }
    static LinExpr scale(const LinExpr& e, const CycNum& a) {
        LinExpr r{e.c0 * a, e.c};
        for (auto& x : r.c) x *= a;
        return r;
    }
    static LinExpr add(const LinExpr& a, const LinExpr& b, int sign) {
        LinExpr r = a;
        r.c0 += b.c0 * CycNum(sign);
        for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k] * CycNum(sign);
        return r;
    }

    Val expr() {
        Val v;
        if (eat('-'))
            v = negate(term());
        else {
            eat('+');
            v = term();
        }
        for (;;) {
            int sign;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
            Val w = term();
            if (w.size() != v.size()) fail("adding tuples of different length");
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = add(v[k], w[k], sign);
        }
        return v;
    }
    Val negate(Val v) const {
        for (auto& e : v) e = scale(e, CycNum(-1));
        return v;
    }
    Val term() {
        Val v = unary();
        for (;;) {
            if (eat('*')) {
                Val w = unary();
                v = multiply(v, w);
            } else if (eat('/')) {
                Val w = unary();
                if (w.size() != 1 || !is_const(w)) fail("division by a non-constant");
                if (w[0].c0.is_zero()) fail("division by zero");
                CycNum inv = w[0].c0.inv();
                for (auto& e : v) e = scale(e, inv);
            } else {
                return v;
            }
        }
    }
    Val multiply(const Val& a, const Val& b) const {
        if (a.size() == 1 && is_const(a)) {
            Val r = b;
            for (auto& e : r) e = scale(e, a[0].c0);
            return r;
        }
        if (b.size() == 1 && is_const(b)) return multiply(b, a);
        if (a.size() == 1 && is_const(b)) {
            Val r;
            for (const auto& e : b) r.push_back(scale(a[0], e.c0));
            return r;
        }
        if (b.size() == 1 && is_const(a)) return multiply(b, a);
        fail("product is not linear");
    }
    Val unary() {
        if (eat('-')) return negate(unary());
        return primary();
    }
    Val primary() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char ch = s_[p_];
        if (ch == '(') {
            ++p_;
            std::vector<Val> items{expr()};
            while (eat(',')) items.push_back(expr());
            if (!eat(')')) fail("missing ')'");
            if (items.size() == 1) return items[0];
            Val t;
            for (auto& it : items) {
                if (it.size() != 1) fail("nested tuple");
                t.push_back(it[0]);
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t q = p_;
            while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
            CycNum a(std::stol(s_.substr(p_, q - p_)));
            p_ = q;
            return {constant(a)};
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t q = p_;
            while (q < s_.size() && std::isalnum(static_cast<unsigned char>(s_[q]))) ++q;
            std::string id = s_.substr(p_, q - p_);
            p_ = q;
            if (id == "i") return {constant(CycNum::i())};
            for (std::size_t k = 0; k < params_.size(); ++k)
                if (params_[k] == id) {
                    LinExpr e = constant(0);
                    e.c[k] = 1;
                    return {e};
                }
            fail("unknown name '" + id + "'");
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string s_;
    const std::vector<std::string>& params_;
    std::size_t p_ = 0;
};

const Subsystem& subsystem(int i) {
    const auto& ss = CartanData::get().subsystems;
    if (i < 1 || i > static_cast<int>(ss.size())) throw MathError("no family " + std::to_string(i));
    return ss[i - 1];
}

// Action of a slot permutation on h, in u-coordinates.
Matrix perm_on_h(const std::array<int, 4>& perm) {
    const auto& u = CartanData::get().u;
    Matrix m(4, 4);
    for (int k = 0; k < 4; ++k) {
        auto c = h_coords(permute(perm, u[k]));
        if (!c) throw std::logic_error("slot permutation does not preserve h");
        for (int i = 0; i < 4; ++i) m(i, k) = (*c)[i];
    }
    return m;
}

int cartan_index(char name) {
    for (const auto& c : cartan_spaces())
        if (c.name == name) return c.m;
    throw MathError(std::string("unknown Cartan basis '") + name + "'");
}

std::string tag(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string tag(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::string show(const std::vector<CycNum>& lam) {
    std::string s = "(";
    for (std::size_t k = 0; k < lam.size(); ++k) s += (k ? "," : "") + lam[k].pretty();
    return s + ")";
}

Tensor row_tensor(const SSCase& c, const SSBlock& b, const std::string& row, const std::vector<CycNum>& lam) {
    auto forms = parse_row(row, c.params);
    if (forms.size() != b.slots.size())
        throw ParseError("row \"" + row + "\" has " + std::to_string(forms.size()) + " entries, expected " +
                         std::to_string(b.slots.size()));
    const auto& basis = cartan_spaces().at(cartan_index(b.basis) - 1).basis;
    Tensor t;
    for (std::size_t s = 0; s < forms.size(); ++s) t = t + basis.at(b.slots[s] - 1).scaled(forms[s].eval(lam));
    return permute(c.perm, t);
}

const std::string& row_text(const SSBlock& b, int k) {
    auto it = b.amended.find(k);
    if (it != b.amended.end()) return it->second;
    if (k < 1 || k > static_cast<int>(b.rows.size())) throw MathError("no row " + std::to_string(k));
    return b.rows[k - 1];
}

std::vector<int> matches_in(const SSCase& c, const SSBlock& b, const std::vector<CycNum>& lam, const Tensor& t) {
    HVec q = family_point(c.i, lam);
    auto g = cartan_conjugator(q, t);
    if (!g) throw MathError("no conjugator onto the tensor");
    GElt gj = block_g(c, b);
    GElt z = coboundary(*g * gj.inv());
    auto spec = semisimple_centralizer(c.i).framed(gj);
    if (!spec.contains(z)) throw MathError("twisted coboundary outside the centralizer");
    std::vector<int> out;
    auto zs = block_z(c, b);
    for (std::size_t k = 0; k < zs.size(); ++k) {
        auto e = spec.equivalent(z, zs[k]);
        if (!e) throw MathError("equivalence undecided for " + tag(c.i, b.j, static_cast<int>(k) + 1));
        if (*e) out.push_back(static_cast<int>(k) + 1);
    }
    return out;
}

bool admissible_in(const SSCase& c, const SSBlock& b, const std::vector<CycNum>& lam) {
    HVec q = family_point(c.i, lam);
    if (!regular(c.i, q)) return false;
    auto gi = gamma_matrix(c, b).inverse();
    HVec r = rebit::apply(*gi, q);
    for (int k = 0; k < 4; ++k)
        if (q[k].conj() != r[k]) return false;
    return true;
}

}  // namespace

std::vector<LinExpr> parse_row(const std::string& s, const std::vector<std::string>& params) {
    return RowParser(s, params).run();
}

// ---------------------------------------------------------------------------
// Case data accessors

Matrix gamma_matrix(const SSCase& c, const SSBlock& b) {
    Matrix g(4, 4);
    if (b.gamma.size() == 4) {
        for (int k = 0; k < 4; ++k) g(k, k) = b.gamma[k];
    } else if (b.gamma.size() == 16) {
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) g(r, s) = b.gamma[4 * r + s];
    } else {
        throw MathError("malformed gamma for case " + tag(c.i, b.j));
    }
    if (c.from) {
        Matrix p = perm_on_h(c.perm);
        g = p * g * *p.inverse();
    }
    return g;
}

GElt block_n(const SSCase& c, const SSBlock& b) { return permute(c.perm, GElt::parse_names(b.n)); }
GElt block_g(const SSCase& c, const SSBlock& b) { return permute(c.perm, GElt::parse_names(b.g)); }

std::vector<GElt> block_z(const SSCase& c, const SSBlock& b) {
    std::vector<GElt> out;
    for (std::size_t k = 0; k < b.z.size(); ++k) {
        auto it = b.z_amended.find(static_cast<int>(k) + 1);
        out.push_back(permute(c.perm, GElt::parse_names(it != b.z_amended.end() ? it->second : b.z[k])));
    }
    return out;
}

int block_cartan(const SSCase& c, const SSBlock& b) {
    int m = cartan_index(b.basis);
    if (!c.from) return m;
    const auto& basis = cartan_spaces().at(m - 1).basis;
    Tensor t;
    int w = 1;
    for (int s : b.slots) t = t + basis.at(s - 1).scaled(CycNum(w++));
    auto d = cartan_detect(permute(c.perm, t));
    if (!d) throw std::logic_error("permuted rows leave the listed Cartan spaces");
    return *d;
}

HVec family_point(int i, const std::vector<CycNum>& lam) {
    const auto& s = subsystem(i);
    if (static_cast<int>(lam.size()) != s.family.cols())
        throw MathError("family " + std::to_string(i) + " takes " + std::to_string(s.family.cols()) + " parameters");
    HVec q;
    for (int j = 0; j < s.family.cols(); ++j)
        for (int r = 0; r < 4; ++r) q[r] += s.family(r, j) * lam[j];
    return q;
}

bool regular(int i, const HVec& q) { return vanishing_roots(q) == subsystem(i).roots; }

namespace {

RealityPattern reality_pattern_in(const SSCase& c, const SSBlock& b) {
    const int i = c.i;
    const Matrix& f = subsystem(i).family;
    Matrix gi = *gamma_matrix(c, b).inverse();
    Matrix gf = gi * f;
    RealityPattern rp;
    rp.real_part = (gf - f).kernel();
    rp.imag_part = (gf + f).kernel();
    for (int k = 0; k < f.cols(); ++k) {
        bool in_re = false, in_im = false;
        for (const auto& v : rp.real_part) in_re = in_re || !v[k].is_zero();
        for (const auto& v : rp.imag_part) in_im = in_im || !v[k].is_zero();
        bool coupled = false;
        for (const auto& v : rp.real_part)
            for (int l = 0; l < f.cols(); ++l)
                if (l != k && !v[k].is_zero() && !v[l].is_zero()) coupled = true;
        for (const auto& v : rp.imag_part)
            for (int l = 0; l < f.cols(); ++l)
                if (l != k && !v[k].is_zero() && !v[l].is_zero()) coupled = true;
        rp.coord.push_back(coupled ? "coupled" : in_re && !in_im ? "real" : in_im && !in_re ? "imaginary" : "coupled");
    }
    return rp;
}

std::vector<CycNum> canonical_in(const SSCase& c, const SSBlock& b, const std::vector<CycNum>& lam) {
    const auto& s = subsystem(c.i);
    HVec x = family_point(c.i, lam);
    std::optional<std::vector<CycNum>> best;
    for (const auto& beta : s.gamma) {
        HVec y = rebit::apply(beta, x);
        auto mu = s.family.solve(Vec(y.begin(), y.end()));
        if (!mu || !admissible_in(c, b, *mu)) continue;
        if (!best || compare_lambda(*mu, *best) > 0) best = *mu;
    }
    if (!best) throw MathError("parameters " + show(lam) + " are not admissible for " + tag(c.i, b.j));
    return *best;
}

std::vector<std::vector<CycNum>> sample_parameters_in(const SSCase& c, const SSBlock& b, int count) {
    const int i = c.i, j = b.j;
    static const int values[] = {1, 2, 3, 5, 7, -1, -2, -3, -5, -7};
    constexpr int nv = 10;
    auto rp = reality_pattern_in(c, b);
    std::vector<Vec> dirs = rp.real_part;
    std::vector<CycNum> unit(rp.real_part.size(), CycNum(1));
    for (const auto& v : rp.imag_part) {
        dirs.push_back(v);
        unit.push_back(CycNum::i());
    }
    const int d = static_cast<int>(dirs.size());
    const int np = subsystem(i).family.cols();
    std::vector<std::vector<CycNum>> out;
    std::vector<int> idx(d, 0);
    for (;;) {
        std::vector<CycNum> lam(np);
        for (int r = 0; r < d; ++r)
            for (int k = 0; k < np; ++k) lam[k] += dirs[r][k] * unit[r] * CycNum(values[idx[r]]);
        if (admissible_in(c, b, lam)) {
            lam = canonical_in(c, b, lam);
            if (std::find(out.begin(), out.end(), lam) == out.end()) out.push_back(lam);
            if (static_cast<int>(out.size()) == count) return out;
        }
        int r = d - 1;
        while (r >= 0 && ++idx[r] == nv) idx[r--] = 0;
        if (r < 0) break;
    }
    if (out.empty()) throw MathError("no admissible parameters for " + tag(i, j));
    return out;
}

}  // namespace

RealityPattern reality_pattern(int i, int j) { return reality_pattern_in(ss_case(i), ss_block(i, j)); }

bool admissible(int i, int j, const std::vector<CycNum>& lam) {
    return admissible_in(ss_case(i), ss_block(i, j), lam);
}

std::vector<std::vector<CycNum>> sample_parameters(int i, int j, int count) {
    return sample_parameters_in(ss_case(i), ss_block(i, j), count);
}

// ---------------------------------------------------------------------------
// Representatives

RealPoint real_point(int i, int j, const std::vector<CycNum>& lam) {
    if (!admissible(i, j, lam)) throw MathError("parameters " + show(lam) + " are not admissible for " + tag(i, j));
    const auto& c = ss_case(i);
    const auto& b = ss_block(i, j);
    RealPoint rp{act(block_g(c, b), h_elt(family_point(i, lam))), block_g(c, b)};
    if (!rp.p.is_real()) throw MathError("real point construction failed for " + tag(i, j));
    return rp;
}

std::vector<std::pair<int, Tensor>> orbit_reps(int i, int j, const std::vector<CycNum>& lam) {
    auto rp = real_point(i, j, lam);
    const auto& c = ss_case(i);
    auto zs = block_z(c, ss_block(i, j));
    std::vector<std::pair<int, Tensor>> out;
    for (std::size_t k = 0; k < zs.size(); ++k) {
        Tensor t = act(epsilon(zs[k]), rp.p);
        if (!t.is_real()) throw MathError("representative for " + tag(i, j, static_cast<int>(k) + 1) + " is not real");
        out.emplace_back(static_cast<int>(k) + 1, t);
    }
    return out;
}

Tensor table_row(int i, int j, int k, const std::vector<CycNum>& lam) {
    const auto& c = ss_case(i);
    const auto& b = ss_block(i, j);
    if (k < 1 || k > b.row_count()) throw MathError("no row " + tag(i, j, k));
    return row_tensor(c, b, row_text(b, k), lam);
}

std::optional<GElt> cartan_conjugator(const HVec& q, const Tensor& t, int m) {
    if (m == 0) {
        auto d = cartan_detect(t);
        if (!d) return std::nullopt;
        m = *d;
    }
    if (!cartan_coords(m, t)) return std::nullopt;
    const GElt& gs = cartan_spaces().at(m - 1).witness;
    auto q2 = h_coords(act(gs.inv(), t));
    if (!q2) return std::nullopt;
    const auto& cd = CartanData::get();
    for (std::size_t w = 0; w < cd.weyl.size(); ++w) {
        if (rebit::apply(cd.weyl[w], q) != *q2) continue;
        GElt g = gs * cd.lift(static_cast<int>(w));
        if (act(g, h_elt(q)) != t) throw std::logic_error("Cartan conjugator check failed");
        return g;
    }
    return std::nullopt;
}

std::vector<int> class_matches(int i, int j, const std::vector<CycNum>& lam, const Tensor& t) {
    return matches_in(ss_case(i), ss_block(i, j), lam, t);
}

// ---------------------------------------------------------------------------
// Verification

SSReport verify_ss_case(const SSCase& c, int samples) {
    SSReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    const int i = c.i;
    auto gam = gamma_group(i);
    std::vector<Matrix> gammas;
    for (const auto& b : c.blocks) {
        const std::string tg = tag(i, b.j);
        try {
            GElt n = block_n(c, b), g = block_g(c, b);
            if (coboundary(g) != n) fail(tg + ": g^-1 conj(g) differs from n");
            Matrix gm = gamma_matrix(c, b);
            // gamma only matters on the family: compare with Gamma_i there
            const Matrix& fam = CartanData::get().subsystems[i - 1].family;
            std::optional<Matrix> gr;
            for (const auto& e : gam.elements())
                if (e * fam == gm * fam) { gr = e; break; }
            if (!gr) fail(tg + ": gamma does not act on the family as an element of Gamma");
            gammas.push_back(gr ? *gr : gm);
            auto w = weyl_of(n);
            if (!w)
                fail(tg + ": n does not normalize h");
            else if (!(*w == gm))
                fail(tg + ": n induces a different Weyl element than gamma");
            if (!(gm * gm == Matrix::identity(4))) fail(tg + ": gamma is not a cocycle");

            auto spec = semisimple_centralizer(i).framed(g);
            auto zs = block_z(c, b);
            auto cl = verify_class_list(spec, zs, static_cast<int>(b.z.size()));
            for (const auto& f : cl.failures) fail(tg + ": " + f);
            if (b.row_count() != static_cast<int>(b.z.size()))
                fail(tg + ": " + std::to_string(b.row_count()) + " rows for " + std::to_string(b.z.size()) +
                     " classes");
            if (!b.note.empty()) rep.notes.push_back(tg + ": " + b.note);
            for (const auto& [k, z] : b.z_amended)
                rep.notes.push_back(tg + ": z" + std::to_string(k) + " = " + b.z.at(k - 1) + " replaced by " + z);
            for (const auto& [k, row] : b.amended)
                rep.notes.push_back(tag(i, b.j, k) + (k <= static_cast<int>(b.rows.size()) ? ": listed row replaced by "
                                                                                          : ": row supplied: ") +
                                    row);

            for (const auto& lam : sample_parameters_in(c, b, samples)) {
                HVec q = family_point(i, lam);
                Tensor qt = h_elt(q);
                Tensor p = act(g, qt);
                if (!p.is_real()) fail(tg + ": g q' is not real for " + show(lam));
                for (int k = 1; k <= b.row_count(); ++k) {
                    const std::string tk = tag(i, b.j, k);
                    ++rep.rows;
                    Tensor t;
                    try {
                        t = row_tensor(c, b, row_text(b, k), lam);
                    } catch (const ParseError& e) {
                        fail(tk + ": " + e.what());
                        continue;
                    }
                    if (!t.is_real()) {
                        fail(tk + ": not real for " + show(lam));
                        continue;
                    }
                    int m = block_cartan(c, b);
                    if (!cartan_coords(m, t)) fail(tk + ": outside the stated Cartan space");
                    if (!is_semisimple(from_tensor(t))) fail(tk + ": not semisimple");
                    if (!cartan_conjugator(q, t, m)) {
                        fail(tk + ": not conjugate to q' for " + show(lam));
                        continue;
                    }
                    auto mt = matches_in(c, b, lam, t);
                    if (mt.size() != 1 || mt[0] != k) {
                        std::string got;
                        for (int x : mt) got += (got.empty() ? "" : ",") + std::to_string(x);
                        fail(tk + ": lies in class {" + got + "} for " + show(lam));
                    }
                }
            }
        } catch (const MathError& e) {
            fail(tg + ": " + e.what());
        }
    }
    for (std::size_t a = 0; a < gammas.size(); ++a)
        for (std::size_t b = a + 1; b < gammas.size(); ++b)
            if (gam.equivalence_witness(gammas[a], gammas[b]))
                fail(tag(i, c.blocks[a].j) + " and " + tag(i, c.blocks[b].j) + ": gamma classes coincide");
    return rep;
}

SSReport verify_ss_tables(int only_case, int samples) {
    SSReport all;
    for (int i = 1; i <= 10; ++i) {
        if (only_case && i != only_case) continue;
        auto r = verify_ss_case(ss_case(i), samples);
        all.rows += r.rows;
        all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
        all.notes.insert(all.notes.end(), r.notes.begin(), r.notes.end());
    }
    return all;
}

// ---------------------------------------------------------------------------
// Classification

int compare_lambda(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        if (int s = (a[k].re() - b[k].re()).sign()) return s;
        if (int s = (a[k].im() - b[k].im()).sign()) return s;
    }
    return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

std::vector<CycNum> canonical_lambda(int i, int j, const std::vector<CycNum>& lam) {
    return canonical_in(ss_case(i), ss_block(i, j), lam);
}

std::vector<int> families_by_centralizer(const Tensor& t) {
    LieElt x = from_tensor(t);
    Matrix ad = ad_matrix(x);
    auto ker = ad.kernel();
    std::vector<Vec> br;
    for (std::size_t a = 0; a < ker.size(); ++a)
        for (std::size_t b = a + 1; b < ker.size(); ++b) {
            LieElt u, v;
            std::copy(ker[a].begin(), ker[a].end(), u.begin());
            std::copy(ker[b].begin(), ker[b].end(), v.begin());
            LieElt w = bracket(u, v);
            br.emplace_back(w.begin(), w.end());
        }
    int dz = static_cast<int>(ker.size()), dd = br.empty() ? 0 : rank_of(br);
    struct Sig {
        int dz, dd;
        std::vector<int> fam;
    };
    static const std::vector<Sig> sigs = {{4, 0, {1}},         {6, 3, {2}},  {10, 8, {3}}, {8, 6, {4, 5, 6}},
                                          {16, 15, {7, 8, 9}}, {10, 9, {10}}, {28, 28, {11}}};
    for (const auto& s : sigs)
        if (s.dz == dz && s.dd == dd) return s.fam;
    return {};
}

SSLabel classify_semisimple(const Tensor& t) {
    if (!t.is_real()) throw ClassifyError("not-real", "not a real state");
    if (!is_semisimple(from_tensor(t))) throw ClassifyError("nilpotent-part", "has nilpotent part");
    auto m = cartan_detect(t);
    if (!m)
        throw ClassifyError("general-position", "general-position input: family-level classification only",
                            families_by_centralizer(t));
    const GElt& gs = cartan_spaces().at(*m - 1).witness;
    auto q2 = h_coords(act(gs.inv(), t));
    if (!q2) throw std::logic_error("Cartan witness does not map onto h");
    auto mem = component_membership(*q2);
    SSLabel lab;
    lab.i = mem.i;
    lab.m = *m;
    if (mem.i == 11) {
        lab.j = lab.k = 1;
        return lab;
    }
    const auto& c = ss_case(mem.i);
    const auto& s = subsystem(mem.i);
    int found_j = 0;
    for (const auto& b : c.blocks) {
        for (const auto& beta : s.gamma) {
            HVec y = rebit::apply(beta, mem.image);
            auto mu = s.family.solve(Vec(y.begin(), y.end()));
            if (mu && admissible_in(c, b, *mu)) {
                if (found_j && found_j != b.j) throw MathError("ambiguous cocycle class");
                found_j = b.j;
                break;
            }
        }
    }
    if (!found_j) throw MathError("no admissible cocycle class; the input is not a real point");
    lab.j = found_j;
    lab.lambda = canonical_lambda(mem.i, found_j, mem.lambda);
    auto ks = class_matches(mem.i, found_j, lab.lambda, t);
    if (ks.empty()) throw MathError("cohomology class not determined");
    // several listed classes can give one real orbit; report the least label
    lab.k = *std::min_element(ks.begin(), ks.end());
    lab.same_orbit = ks;
    return lab;
}

}  // namespace rebit
