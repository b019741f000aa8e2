#include "rebit/galois.hpp"

#include <algorithm>
#include <numeric>

namespace rebit {

namespace {

std::size_t elem_hash(const GElt& g) { return g.hash(); }
std::size_t elem_hash(const Matrix& m) { return MatrixHash{}(m); }
GElt elem_inv(const GElt& g) { return g.inv(); }
Matrix elem_inv(const Matrix& m) {
    auto r = m.inverse();
    if (!r) throw MathError("singular matrix in group");
    return *r;
}
int elem_compare(const GElt& a, const GElt& b) { return GElt::compare(a, b); }
int elem_compare(const Matrix& a, const Matrix& b) { return compare_matrix(a, b); }
bool elem_is_one(const GElt& g) { return g.is_identity(); }
bool elem_is_one(const Matrix& m) { return m == Matrix::identity(m.rows()); }
GElt elem_one(const GElt&) { return GElt::identity(); }
Matrix elem_one(const Matrix& m) { return Matrix::identity(m.rows()); }

}  // namespace

std::size_t MatrixHash::operator()(const Matrix& m) const {
    std::size_t h = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) hash_combine(h, m(i, j).hash());
    return h;
}

int compare_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (int c = CycNum::compare(a(i, j), b(i, j))) return c;
    return 0;
}

template <class T>
FiniteConjGroup<T>::FiniteConjGroup(std::vector<T> elements, Sigma sigma)
    : elems_(std::move(elements)), sigma_(std::move(sigma)) {
    if (elems_.empty()) throw MathError("empty group");
    std::size_t nb = 2 * elems_.size() + 1;
    buckets_.assign(nb, {});
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        hashes_.push_back(elem_hash(elems_[k]));
        buckets_[hashes_.back() % nb].push_back(static_cast<int>(k));
    }
    for (const auto& x : elems_) {
        T s = sigma_(x);
        if (index(s) < 0 || !(sigma_(s) == x)) throw MathError("sigma is not an involution of the group");
    }
    // Homomorphism check: all pairs for small groups, a fixed sample otherwise.
    std::size_t n = elems_.size();
    auto check = [&](std::size_t a, std::size_t b) {
        if (!(sigma_(elems_[a] * elems_[b]) == sigma_(elems_[a]) * sigma_(elems_[b])))
            throw MathError("sigma is not an automorphism");
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) check(a, b);
    } else {
        std::uint64_t st = 88172645463325252ULL;
        for (int k = 0; k < 2000; ++k) {
            st ^= st << 13;
            st ^= st >> 7;
            st ^= st << 17;
            check(st % n, (st >> 20) % n);
        }
    }
}

template <class T>
FiniteConjGroup<T> FiniteConjGroup<T>::generate(const std::vector<T>& gens, Sigma sigma, std::size_t limit) {
    if (gens.empty()) throw MathError("no generators");
    std::vector<T> elts{elem_one(gens[0])};
    std::unordered_map<std::size_t, std::vector<int>> seen;
    seen[elem_hash(elts[0])].push_back(0);
    for (std::size_t k = 0; k < elts.size(); ++k)
        for (const auto& g : gens) {
            T x = elts[k] * g;
            auto& bucket = seen[elem_hash(x)];
            bool found = false;
            for (int j : bucket) found = found || elts[j] == x;
            if (found) continue;
            bucket.push_back(static_cast<int>(elts.size()));
            elts.push_back(std::move(x));
            if (elts.size() > limit) throw MathError("group generation exceeded the size limit");
        }
    return FiniteConjGroup(std::move(elts), std::move(sigma));
}

template <class T>
int FiniteConjGroup<T>::index(const T& x) const {
    std::size_t h = elem_hash(x);
    for (int k : buckets_[h % buckets_.size()])
        if (hashes_[k] == h && elems_[k] == x) return k;
    return -1;
}

template <class T>
bool FiniteConjGroup<T>::is_cocycle(const T& c) const {
    return elem_is_one(c * sigma_(c));
}

template <class T>
std::optional<T> FiniteConjGroup<T>::equivalence_witness(const T& c, const T& b) const {
    for (const auto& a : elems_)
        if (a * c * elem_inv(sigma_(a)) == b) return a;
    return std::nullopt;
}

template <class T>
H1Classes FiniteConjGroup<T>::h1() const {
    H1Classes out;
    const int n = static_cast<int>(elems_.size());
    out.class_of.assign(n, -1);
    std::vector<int> coc;
    for (int k = 0; k < n; ++k)
        if (is_cocycle(elems_[k])) coc.push_back(k);
    out.cocycles = static_cast<int>(coc.size());
    std::sort(coc.begin(), coc.end(), [&](int a, int b) { return elem_compare(elems_[a], elems_[b]) < 0; });
    std::vector<T> sinv;
    sinv.reserve(n);
    for (const auto& a : elems_) sinv.push_back(elem_inv(sigma_(a)));
    const int unseen = -2;
    std::vector<int> mark(n, unseen);
    for (int c : coc) {
        if (mark[c] != unseen) continue;
        int cls = static_cast<int>(out.reps.size());
        out.reps.push_back(c);
        int size = 0;
        for (int a = 0; a < n; ++a) {
            int x = index(elems_[a] * elems_[c] * sinv[a]);
            if (x < 0) throw MathError("group not closed under the twisted action");
            if (mark[x] == unseen) {
                mark[x] = cls;
                ++size;
            }
        }
        out.sizes.push_back(size);
    }
    for (int k = 0; k < n; ++k) out.class_of[k] = mark[k] == unseen ? -1 : mark[k];
    return out;
}

template class FiniteConjGroup<GElt>;
template class FiniteConjGroup<Matrix>;

WeylGroup weyl_group() {
    return WeylGroup(CartanData::get().weyl, [](const Matrix& m) { return m; });
}

WeylGroup gamma_group(int i) {
    const auto& ss = CartanData::get().subsystems;
    if (i < 1 || i > static_cast<int>(ss.size())) throw MathError("no subsystem " + std::to_string(i));
    return WeylGroup(ss[i - 1].gamma, [](const Matrix& m) { return m; });
}

GGroup normalizer_group() {
    return GGroup(CartanData::get().normalizer, [](const GElt& g) { return g.conj(); });
}

Matrix cocycle_to_weyl(const GElt& n) {
    auto w = weyl_of(n);
    if (!w) throw MathError("element does not normalize h");
    return *w;
}

namespace {

Matrix int_matrix(std::initializer_list<std::array<int, 4>> rows) {
    Matrix m(4, 4);
    int i = 0;
    for (const auto& r : rows) {
        for (int j = 0; j < 4; ++j) m(i, j) = r[j];
        ++i;
    }
    return m;
}

Matrix diag(int a, int b, int c, int d) {
    return int_matrix({{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}});
}

}  // namespace

const std::vector<CocycleLift>& weyl_cocycle_lifts() {
    static const std::vector<CocycleLift> rows = [] {
        std::vector<std::pair<Matrix, std::string>> raw = {
            {diag(-1, -1, -1, -1), "(-I,I,I,I)"},
            {diag(-1, -1, -1, 1), "(M,M,-N,N)"},
            {diag(-1, -1, 1, 1), "(L,I,I,L)"},
            {diag(-1, 1, -1, 1), "(I,L,I,L)"},
            {diag(-1, 1, 1, -1), "(I,I,L,L)"},
            {diag(1, -1, -1, 1), "(I,I,L,-L)"},
            {diag(1, -1, 1, -1), "(I,L,I,-L)"},
            {diag(1, 1, -1, -1), "(L,I,I,-L)"},
            {diag(-1, 1, 1, 1), "(M,M,M,M)"},
            {diag(1, -1, 1, 1), "(N,M,M,N)"},
            {diag(1, 1, -1, 1), "(M,N,M,N)"},
            {diag(1, 1, 1, -1), "(M,M,N,N)"},
            {diag(1, -1, -1, -1), "(-N,N,N,N)"},
            {int_matrix({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}), "(L,L,-K,K)"},
            {int_matrix({{0, 0, -1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}), "(I,K,I,K)"},
            {int_matrix({{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}), "(K,I,I,K)"},
        };
        std::vector<CocycleLift> out;
        for (auto& [w, name] : raw) out.push_back({w, GElt::parse_names(name), name});
        return out;
    }();
    return rows;
}

std::optional<GElt> lift_of_weyl(const Matrix& w) {
    if (w == Matrix::identity(4)) return GElt::identity();
    for (const auto& r : weyl_cocycle_lifts())
        if (r.w == w) return r.n;
    return std::nullopt;
}

const std::vector<EpsilonRow>& epsilon_table() {
    static const std::vector<EpsilonRow> rows = [] {
        std::vector<std::pair<std::string, std::string>> raw = {
            {"-I", "L"},  {"M", "D(eta^5)"}, {"-M", "D(eta)"}, {"N", "D(eta^7)"}, {"-N", "-D(eta^3)"},
            {"L", "M"},   {"-L", "D(zeta)"}, {"K", "LF"},      {"-K", "F"},
        };
        std::vector<EpsilonRow> out;
        for (auto& [a, e] : raw) out.push_back({a, mats::by_name(a), mats::by_name(e)});
        return out;
    }();
    return rows;
}

Mat2 epsilon(const Mat2& a) {
    if (a == Mat2::identity()) return a;
    for (const auto& r : epsilon_table())
        if (r.a == a) return r.eps;
    throw MathError("no stored epsilon for " + a.pretty());
}

GElt epsilon(const GElt& z) {
    GElt g;
    for (int k = 0; k < 4; ++k) g.f[k] = epsilon(z.f[k]);
    return g;
}

GElt cartan_cocycle(int m) {
    const auto& cs = cartan_spaces();
    if (m < 1 || m > static_cast<int>(cs.size())) throw MathError("no Cartan subspace " + std::to_string(m));
    return coboundary(cs[m - 1].witness);
}

// ---------------------------------------------------------------------------
// Centralizers

namespace {

// Generators of {c in Z^n : c^T A = 0} where A is n x d with integer entries.
std::vector<std::vector<long>> left_kernel_lattice(const std::vector<std::vector<int>>& rows, int d) {
    const int n = static_cast<int>(rows.size());
    Matrix at(d, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) at(j, i) = rows[i][j];
    auto ker = at.kernel();
    std::vector<std::vector<long>> gens;
    if (ker.empty()) return gens;
    mpz_class den = 1;
    for (const auto& v : ker)
        for (const auto& x : v) {
            if (!x.is_rational()) throw std::logic_error("non-rational lattice");
            den = lcm(den, x[0].get_den());
        }
    auto to_int = [&](const std::vector<mpq_class>& v) -> std::optional<std::vector<long>> {
        std::vector<long> c(n);
        for (int i = 0; i < n; ++i) {
            if (v[i].get_den() != 1) return std::nullopt;
            c[i] = v[i].get_num().get_si();
        }
        return c;
    };
    const int r = static_cast<int>(ker.size());
    for (const auto& v : ker) {
        std::vector<mpq_class> s(n);
        for (int i = 0; i < n; ++i) s[i] = v[i][0] * den;
        gens.push_back(*to_int(s));
    }
    long dl = den.get_si();
    if (dl > 1) {
        double count = std::pow(static_cast<double>(dl), r);
        if (count > 1e5) throw MathError("lattice saturation too large");
        std::vector<long> t(r, 0);
        for (;;) {
            int k = 0;
            while (k < r && ++t[k] == dl) t[k++] = 0;
            if (k == r) break;
            std::vector<mpq_class> s(n, 0);
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < n; ++i) s[i] += ker[j][i][0] * t[j];
            if (auto c = to_int(s)) gens.push_back(*c);
        }
    }
    return gens;
}

CycNum power_product(const std::vector<CycNum>& xs, const std::vector<long>& c) {
    CycNum r(1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (c[i]) r *= xs[i].pow(c[i]);
    return r;
}

// Solvable over (C^x)^d: prod_j a_j^rows[i][j] = vals[i] for all i.
bool torus_values_solvable(const std::vector<std::vector<int>>& rows, int d, const std::vector<CycNum>& vals) {
    for (const auto& v : vals)
        if (v.is_zero()) return false;
    for (const auto& c : left_kernel_lattice(rows, d))
        if (!power_product(vals, c).is_one()) return false;
    return true;
}

std::vector<int> slot_row(const std::array<std::vector<int>, 4>& exps, int k, int dim) {
    std::vector<int> r(dim, 0);
    for (int j = 0; j < dim && j < static_cast<int>(exps[k].size()); ++j) r[j] = exps[k][j];
    return r;
}

}  // namespace

bool torus_twist_solvable(const std::array<std::vector<int>, 4>& exps, int dim, const GElt& y, const GElt& yp) {
    // D(m) Y D(conj m)^-1 = [[Y00 m/conj(m), Y01 |m|^2], [Y10/|m|^2, Y11 conj(m)/m]]
    std::vector<std::vector<int>> prow, mrow;
    std::vector<CycNum> pval, mval;
    for (int k = 0; k < 4; ++k) {
        const Mat2& Y = y.f[k];
        const Mat2& P = yp.f[k];
        if (Y.a.is_zero() != P.a.is_zero() || Y.b.is_zero() != P.b.is_zero() ||
            Y.c.is_zero() != P.c.is_zero() || Y.d.is_zero() != P.d.is_zero())
            return false;
        auto row = slot_row(exps, k, dim);
        if (!Y.a.is_zero()) prow.push_back(row), pval.push_back(P.a / Y.a);
        if (!Y.d.is_zero()) prow.push_back(row), pval.push_back(Y.d / P.d);
        if (!Y.b.is_zero()) mrow.push_back(row), mval.push_back(P.b / Y.b);
        if (!Y.c.is_zero()) mrow.push_back(row), mval.push_back(Y.c / P.c);
    }
    for (const auto& x : pval)
        if (!(x * x.conj()).is_one()) return false;
    for (const auto& r : mval)
        if (!r.is_real() || r.sign() <= 0) return false;
    // Phases live in the compact torus, moduli in the positive reals; both
    // are divisible groups, so the lattice conditions are sufficient.
    return torus_values_solvable(prow, dim, pval) && torus_values_solvable(mrow, dim, mval);
}

CentralizerSpec CentralizerSpec::framed(const GElt& g) const {
    CentralizerSpec s = *this;
    s.frame = g * frame;
    return s;
}

std::vector<GElt> CentralizerSpec::finite_part() const {
    if (finite_gens.empty()) return {GElt::identity()};
    return generate_group(finite_gens, 4096);
}

GElt CentralizerSpec::component_element(const std::vector<CycNum>& params) const {
    GElt g = GElt::identity();
    if (kind == Kind::Torus) {
        if (static_cast<int>(params.size()) != dim) throw MathError("wrong number of torus parameters");
        for (int k = 0; k < 4; ++k) {
            CycNum m(1);
            auto row = slot_row(exps, k, dim);
            for (int j = 0; j < dim; ++j) m *= params[j].pow(row[j]);
            g.f[k] = mats::D(m);
        }
    } else if (kind == Kind::SL2) {
        if (static_cast<int>(params.size()) != 4 * dim) throw MathError("wrong number of SL(2) parameters");
        for (int k = 0; k < 4; ++k) {
            if (form[k].factor < 0) continue;
            const CycNum* p = &params[4 * form[k].factor];
            Mat2 a{p[0], p[1], p[2], p[3]};
            if (!a.det().is_one()) throw MathError("SL(2) parameter block is not unimodular");
            g.f[k] = form[k].sharp ? mats::sharp(a) : a;
        }
    }
    return g;
}

bool CentralizerSpec::in_identity_component(const GElt& x) const {
    if (kind == Kind::Finite) return x.is_identity();
    if (kind == Kind::Torus) {
        std::vector<std::vector<int>> rows;
        std::vector<CycNum> vals;
        for (int k = 0; k < 4; ++k) {
            const Mat2& m = x.f[k];
            if (!m.is_diagonal() || !(m.a * m.d).is_one()) return false;
            rows.push_back(slot_row(exps, k, dim));
            vals.push_back(m.a);
        }
        return torus_values_solvable(rows, dim, vals);
    }
    std::vector<std::optional<Mat2>> base(dim);
    for (int k = 0; k < 4; ++k) {
        Mat2 m = x.f[k];
        if (form[k].factor < 0) {
            if (!(m == Mat2::identity())) return false;
            continue;
        }
        if (form[k].sharp) m = mats::sharp(m);
        auto& b = base[form[k].factor];
        if (!b) {
            if (!m.det().is_one()) return false;
            b = m;
        } else if (!(*b == m)) {
            return false;
        }
    }
    return true;
}

bool CentralizerSpec::contains(const GElt& x) const {
    GElt y = frame.inv() * x * frame;
    for (const auto& f : finite_part())
        if (in_identity_component(y * f.inv())) return true;
    return false;
}

namespace {

bool scalar_slots(const GElt& g) {
    for (const auto& m : g.f)
        if (!m.is_diagonal() || m.a != m.d) return false;
    return true;
}

}  // namespace

std::optional<bool> CentralizerSpec::equivalent(const GElt& z, const GElt& zp) const {
    const GElt gi = frame.inv();
    const GElt cg = frame.conj();
    GElt c = gi * z * cg, cp = gi * zp * cg;
    auto fin = finite_part();
    if (kind == Kind::Finite) {
        for (const auto& f : fin)
            if (f * c * f.conj().inv() == cp) return true;
        return false;
    }
    if (kind == Kind::Torus) {
        for (const auto& f : fin)
            if (torus_twist_solvable(exps, dim, f * c * f.conj().inv(), cp)) return true;
        return false;
    }
    // SL(2) factors: with n = g^-1 conj(g) scalar in each slot and the twisted
    // element central, equivalence reduces to B conj(B)^-1 = W in each factor,
    // which holds iff W conj(W) = 1 (H^1 of SL(2) is trivial).
    GElt n = gi * cg;
    if (!scalar_slots(n)) return std::nullopt;
    // The reduction needs the first argument central up to n; the relation is symmetric.
    bool central = true;
    for (const auto& f : fin) central = central && scalar_slots(f * c * f.conj().inv() * n.inv());
    if (!central) {
        bool swapped = true;
        for (const auto& f : fin) swapped = swapped && scalar_slots(f * cp * f.conj().inv() * n.inv());
        if (!swapped) return std::nullopt;
        std::swap(c, cp);
    }
    for (const auto& f : fin) {
        GElt y = f * c * f.conj().inv();  // in q'-coordinates, times n
        GElt yz = y * n.inv();
        if (!scalar_slots(yz)) return std::nullopt;
        GElt w = yz.inv() * cp * n.inv();
        if (!in_identity_component(w)) continue;
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k)
            if (form[k].factor >= 0) ok = (w.f[k] * w.f[k].conj()) == Mat2::identity();
        if (ok) return true;
    }
    return false;
}

CentralizerSpec finite_centralizer(std::string tag, std::vector<GElt> gens) {
    CentralizerSpec s;
    s.tag = std::move(tag);
    s.kind = CentralizerSpec::Kind::Finite;
    s.finite_gens = std::move(gens);
    return s;
}

CentralizerSpec torus_centralizer(std::string tag, std::array<std::vector<int>, 4> exps, std::vector<GElt> gens) {
    CentralizerSpec s;
    s.tag = std::move(tag);
    s.kind = CentralizerSpec::Kind::Torus;
    s.dim = 0;
    for (const auto& e : exps) s.dim = std::max(s.dim, static_cast<int>(e.size()));
    s.exps = std::move(exps);
    s.finite_gens = std::move(gens);
    return s;
}

CentralizerSpec sl2_centralizer(std::string tag, int factors, std::array<SlotForm, 4> form, std::vector<GElt> gens) {
    CentralizerSpec s;
    s.tag = std::move(tag);
    s.kind = CentralizerSpec::Kind::SL2;
    s.dim = factors;
    s.form = form;
    s.finite_gens = std::move(gens);
    return s;
}

CentralizerSpec semisimple_centralizer(int i) {
    auto G = [](const char* s) { return GElt::parse_names(s); };
    SlotForm a{0, false}, as{0, true}, b{1, false}, bs{1, true};
    std::string tag = "Z" + std::to_string(i);
    switch (i) {
        case 1:
            return finite_centralizer(tag, {G("(J,J,J,J)"), G("(-I,-I,I,I)"), G("(-I,I,-I,I)"), G("(K,K,K,K)")});
        case 2:
            return torus_centralizer(tag, {{{-1}, {-1}, {1}, {1}}}, {G("(-I,-I,I,I)"), G("(-I,I,-I,I)"), G("(J,J,J,J)")});
        case 3:
            return sl2_centralizer(tag, 1, {as, as, a, a}, {G("(-I,-I,I,I)"), G("(-I,I,-I,I)")});
        case 4:
            return torus_centralizer(tag, {{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}}, {G("(-I,I,-I,I)"), G("(J,J,J,J)")});
        case 5:
            return torus_centralizer(tag, {{{-1, 0}, {0, -1}, {1, 0}, {0, 1}}}, {G("(-I,-I,I,I)"), G("(J,J,J,J)")});
        case 6:
            return torus_centralizer(tag, {{{-1, 0}, {0, 1}, {0, -1}, {1, 0}}}, {G("(-I,I,-I,I)"), G("(J,J,J,J)")});
        case 7:
            return sl2_centralizer(tag, 2, {as, a, bs, b}, {G("(-I,I,-I,I)")});
        case 8:
            return sl2_centralizer(tag, 2, {as, bs, a, b}, {G("(-I,-I,I,I)")});
        case 9:
            return sl2_centralizer(tag, 2, {as, b, bs, a}, {G("(-I,I,-I,I)")});
        case 10:
            return torus_centralizer(tag, {{{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {G("(J,J,J,J)")});
        default:
            throw MathError("no centralizer for family " + std::to_string(i));
    }
}

CentralizerCheck check_centralizer(const CentralizerSpec& spec, const std::vector<Tensor>& fixed,
                                   const std::vector<G0Elt>& fixed0) {
    CentralizerCheck out;
    auto fail = [&](std::string m) {
        out.ok = false;
        out.failures.push_back(spec.tag + ": " + std::move(m));
    };
    auto fixes = [&](const GElt& g) {
        for (const auto& t : fixed)
            if (act(g, t) != t) return false;
        for (const auto& x : fixed0)
            if (!(act(g, x) == x)) return false;
        return true;
    };
    const GElt fi = spec.frame.inv();
    for (std::size_t k = 0; k < spec.finite_gens.size(); ++k)
        if (!fixes(spec.frame * spec.finite_gens[k] * fi)) fail("generator " + spec.finite_gens[k].pretty() + " moves the data");
    std::vector<std::vector<CycNum>> samples;
    if (spec.kind == CentralizerSpec::Kind::Torus) {
        std::vector<CycNum> pool = {CycNum(2), CycNum::eta(1), CycNum(1) + CycNum::i(), CycNum(-3, 5)};
        for (int s = 0; s < 3; ++s) {
            std::vector<CycNum> p;
            for (int j = 0; j < spec.dim; ++j) p.push_back(pool[(j + s) % pool.size()]);
            samples.push_back(p);
        }
    } else if (spec.kind == CentralizerSpec::Kind::SL2) {
        std::vector<std::array<CycNum, 4>> pool = {
            {2, 1, 1, 1}, {1, CycNum::i(), 0, 1}, {CycNum::eta(1), 0, 1, CycNum::eta(15)}, {1, 0, -3, 1}};
        for (int s = 0; s < 3; ++s) {
            std::vector<CycNum> p;
            for (int j = 0; j < spec.dim; ++j)
                for (const auto& x : pool[(j + s) % pool.size()]) p.push_back(x);
            samples.push_back(p);
        }
    }
    for (const auto& p : samples)
        if (!fixes(spec.frame * spec.component_element(p) * fi)) fail("identity-component sample moves the data");
    // Stabilizer Lie algebra in sl(2)^4.
    std::vector<Vec> cols;
    for (int b = 0; b < 12; ++b) {
        G0Elt x = G0Elt::basis(b);
        Vec col;
        for (const auto& t : fixed) {
            Tensor y = act(x, t);
            col.insert(col.end(), y.t.begin(), y.t.end());
        }
        for (const auto& h : fixed0) {
            auto c = bracket(x, h).coords();
            col.insert(col.end(), c.begin(), c.end());
        }
        cols.push_back(col);
    }
    const int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    Matrix m(rows, 12);
    for (int j = 0; j < 12; ++j)
        for (int r = 0; r < rows; ++r) m(r, j) = cols[j][r];
    out.lie_dim = 12 - m.rank();
    int expected = spec.kind == CentralizerSpec::Kind::Torus ? spec.dim
                   : spec.kind == CentralizerSpec::Kind::SL2 ? 3 * spec.dim
                                                              : 0;
    if (out.lie_dim != expected)
        fail("stabilizer dimension " + std::to_string(out.lie_dim) + ", expected " + std::to_string(expected));
    return out;
}

ClassListReport verify_class_list(const CentralizerSpec& spec, const std::vector<GElt>& list, int expected) {
    ClassListReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(spec.tag + ": " + std::move(msg));
    };
    if (static_cast<int>(list.size()) != expected)
        fail("list has " + std::to_string(list.size()) + " entries, expected " + std::to_string(expected));
    for (std::size_t a = 0; a < list.size(); ++a) {
        if (!(list[a] * list[a].conj()).is_identity()) fail("z" + std::to_string(a + 1) + " is not a cocycle");
        if (!spec.contains(list[a])) fail("z" + std::to_string(a + 1) + " is not in the group");
    }
    for (std::size_t a = 0; a < list.size(); ++a)
        for (std::size_t b = a + 1; b < list.size(); ++b) {
            auto e = spec.equivalent(list[a], list[b]);
            if (!e)
                fail("equivalence of z" + std::to_string(a + 1) + ", z" + std::to_string(b + 1) + " undecided");
            else if (*e)
                fail("z" + std::to_string(a + 1) + " ~ z" + std::to_string(b + 1));
        }
    return rep;
}

}  // namespace rebit
