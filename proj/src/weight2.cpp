#include "griesslab/weight2.hpp"

#include <stdexcept>

namespace griesslab {

namespace {

using Mat8 = std::array<std::array<Rat, 8>, 8>;

Mat8 mat_mul(const Mat8& a, const Mat8& b) {
    Mat8 r{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 8; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

const Mat8& gram_rat() {
    static const Mat8 g = [] {
        Mat8 m{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m[i][j] = Rat(e8_gram()[i][j]);
        return m;
    }();
    return g;
}

bool quad_zero(const Mat8& q) {
    for (const auto& row : q)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

// v^T G Q G v
Rat quad_eval(const Mat8& q, const RootVec& v) {
    const auto& g = e8_gram();
    std::array<int, 8> gv{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) gv[i] += g[i][j] * v[j];
    Rat s(0);
    for (int i = 0; i < 8; ++i) {
        if (!gv[i]) continue;
        for (int j = 0; j < 8; ++j)
            if (gv[j] && !q[i][j].is_zero()) s += q[i][j] * Rat(gv[i] * gv[j]);
    }
    return s;
}

RootVec add(const RootVec& a, const RootVec& b) {
    RootVec r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
    return r;
}

RootVec neg(const RootVec& a) {
    RootVec r;
    for (int i = 0; i < 8; ++i) r[i] = -a[i];
    return r;
}

}  // namespace

GriessTable empty_table(const CaseDescriptor& cs) {
    GriessTable t;
    t.cs = &cs;
    for (std::size_t k = 1; k <= cs.comps.size(); ++k) t.labels.push_back("w" + std::to_string(k));
    for (int j = 1; j < cs.n; ++j) t.labels.push_back("X" + std::to_string(j));
    int d = t.dim();
    t.prod.assign(d, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d, Rat(0))));
    t.gram = Matrix<Rat>(d, d);
    return t;
}

Weight2Element& Weight2Element::operator+=(const Weight2Element& o) {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) quad[i][j] += o.quad[i][j];
        lin[i] += o.lin[i];
    }
    for (const auto& [k, c] : o.expo) expo[k] += c;
    prune();
    return *this;
}

Weight2Element& Weight2Element::operator-=(const Weight2Element& o) {
    Weight2Element m = o;
    m *= Rat(-1);
    return *this += m;
}

Weight2Element& Weight2Element::operator*=(const Rat& s) {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) quad[i][j] *= s;
        lin[i] *= s;
    }
    for (auto& [k, c] : expo) c *= s;
    prune();
    return *this;
}

bool operator==(const Weight2Element& a, const Weight2Element& b) {
    return a.quad == b.quad && a.lin == b.lin && a.expo == b.expo;
}

bool Weight2Element::lin_is_zero() const {
    for (const auto& x : lin)
        if (!x.is_zero()) return false;
    return true;
}

void Weight2Element::prune() {
    for (auto it = expo.begin(); it != expo.end();) {
        if (it->second.is_zero()) it = expo.erase(it);
        else ++it;
    }
}

Weight2Element heis_square(const RootVec& v) {
    Weight2Element e;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) e.quad[i][j] = Rat(v[i] * v[j]);
    return e;
}

Weight2Element exp_elem(const RootVec& v) {
    if (pair(v, v) != 2) throw std::domain_error("exp_elem: not a root");
    Weight2Element e;
    e.expo[v] = Rat(1);
    return e;
}

Weight2Element griess_product(const Weight2Element& a, const Weight2Element& b) {
    Weight2Element r;
    const Mat8& g = gram_rat();
    if (!a.lin_is_zero() || !b.lin_is_zero())
        throw std::logic_error("griess_product: operands with a degree(-2) part are not supported");

    // quadratic o quadratic = 2(A G B + B G A)
    if (!quad_zero(a.quad) && !quad_zero(b.quad)) {
        Mat8 agb = mat_mul(mat_mul(a.quad, g), b.quad);
        Mat8 bga = mat_mul(mat_mul(b.quad, g), a.quad);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) r.quad[i][j] = Rat(2) * (agb[i][j] + bga[i][j]);
    }
    // quadratic o e^x = <h,x><h',x> e^x, x = sqrt2 v
    if (!quad_zero(a.quad))
        for (const auto& [v, c] : b.expo) r.expo[v] += Rat(2) * quad_eval(a.quad, v) * c;
    if (!quad_zero(b.quad))
        for (const auto& [v, c] : a.expo) r.expo[v] += Rat(2) * quad_eval(b.quad, v) * c;

    // e^x o e^y
    if (!a.expo.empty() && !b.expo.empty()) {
        const auto& gi = e8_gram();
        std::vector<std::pair<std::array<int, 8>, const std::pair<const RootVec, Rat>*>> bg;
        bg.reserve(b.expo.size());
        for (const auto& kv : b.expo) {
            std::array<int, 8> gw{};
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) gw[i] += gi[i][j] * kv.first[j];
            bg.emplace_back(gw, &kv);
        }
        for (const auto& [v, ca] : a.expo) {
            for (const auto& [gw, kv] : bg) {
                int p = 0;
                for (int i = 0; i < 8; ++i) p += v[i] * gw[i];
                if (p >= 0) continue;
                Rat c = ca * kv->second;
                if (p == -1) {
                    r.expo[add(v, kv->first)] += c;
                } else if (p == -2) {
                    // (x(-1)^2 + x(-2))/2 with x = sqrt2 v
                    for (int i = 0; i < 8; ++i) {
                        if (!v[i]) continue;
                        for (int j = 0; j < 8; ++j)
                            if (v[j]) r.quad[i][j] += c * Rat(v[i] * v[j]);
                        r.lin[i] += c * Rat(v[i], 2);
                    }
                } else {
                    throw std::logic_error("griess_product: root pairing below -2");
                }
            }
        }
    }
    r.prune();
    return r;
}

Rat griess_form(const Weight2Element& a, const Weight2Element& b) {
    Rat s(0);
    const Mat8& g = gram_rat();
    if (!quad_zero(a.quad) && !quad_zero(b.quad)) {
        Mat8 m = mat_mul(mat_mul(mat_mul(a.quad, g), b.quad), g);
        Rat tr(0);
        for (int i = 0; i < 8; ++i) tr += m[i][i];
        s += Rat(2) * tr;
    }
    if (!a.lin_is_zero() && !b.lin_is_zero()) s += Rat(4) * pair(a.lin, b.lin);
    for (const auto& [v, c] : a.expo) {
        auto it = b.expo.find(neg(v));
        if (it != b.expo.end()) s += c * it->second;
    }
    return s;
}

BasisElements build_basis_elements(const CaseDescriptor& cs) {
    BasisElements be;
    for (const auto& comp : cs.comps) {
        int h = comp.coxeter;
        Weight2Element sq, ex;
        for (const auto& r : comp.roots) {
            sq += heis_square(r);
            ex += exp_elem(r);
        }
        // sq is the sum over all roots = 2 * (sum over positive roots)
        Weight2Element half = Rat(1, 2) * sq;
        Weight2Element wt = Rat(1, h * (h + 2)) * half + Rat(1, h + 2) * ex;
        Weight2Element s = Rat(1, 2 * (h + 2)) * half - Rat(1, h + 2) * ex;
        Weight2Element om = Rat(1, 2 * h) * half;
        be.omega_tilde.push_back(wt);
        be.s.push_back(s);
        be.omega.push_back(om);
    }
    for (int j = 1; j < cs.n; ++j) {
        Weight2Element x;
        for (const auto& r : coset_roots(cs, j)) x.expo[r] = Rat(1);
        be.x.push_back(x);
    }
    return be;
}

std::vector<Rat> express_in_span(const Weight2Element& e, const std::vector<Weight2Element>& basis) {
    // coordinates: 36 quad entries (i <= j), 8 lin, 240 roots
    const auto& roots = e8_roots();
    std::size_t nc = 36 + 8 + roots.size();
    auto flat = [&](const Weight2Element& w) {
        std::vector<Rat> f(nc, Rat(0));
        std::size_t k = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = i; j < 8; ++j) f[k++] = w.quad[i][j];
        for (int i = 0; i < 8; ++i) f[k++] = w.lin[i];
        for (const auto& [v, c] : w.expo) {
            int idx = root_index(v);
            if (idx < 0) throw std::logic_error("express_in_span: exponential key is not a root");
            f[44 + idx] = c;
        }
        return f;
    };
    Matrix<Rat> m(nc, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        auto f = flat(basis[b]);
        for (std::size_t i = 0; i < nc; ++i) m(i, b) = f[i];
    }
    if (rank(m) != basis.size()) throw std::logic_error("express_in_span: basis is dependent");
    auto x = solve_linear(m, flat(e));
    if (!x) throw std::runtime_error("express_in_span: element is not in the span");
    return *x;
}

GriessTable derive_griess_table(const CaseDescriptor& cs) {
    GriessTable t = empty_table(cs);
    BasisElements be = build_basis_elements(cs);
    std::vector<Weight2Element> basis = be.omega_tilde;
    basis.insert(basis.end(), be.x.begin(), be.x.end());
    int d = t.dim();
    for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            Weight2Element p = griess_product(basis[a], basis[b]);
            if (!p.lin_is_zero())
                throw std::runtime_error("derive_griess_table: degree(-2) terms did not cancel for " +
                                         t.labels[a] + "," + t.labels[b]);
            if (a != b && griess_product(basis[b], basis[a]) != p)
                throw std::runtime_error("derive_griess_table: product not commutative");
            auto c = express_in_span(p, basis);
            t.prod[a][b] = c;
            t.prod[b][a] = c;
            Rat f = griess_form(basis[a], basis[b]);
            t.gram(a, b) = f;
            t.gram(b, a) = f;
        }
    }
    return t;
}

std::vector<std::vector<Rat>> omega_tilde_eigenvalues(const GriessTable& t) {
    std::vector<std::vector<Rat>> ev(t.l(), std::vector<Rat>(t.n() - 1, Rat(0)));
    for (int k = 1; k <= t.l(); ++k) {
        for (int j = 1; j < t.n(); ++j) {
            const auto& row = t.prod[t.w(k)][t.x(j)];
            for (int d = 0; d < t.dim(); ++d)
                if (d != t.x(j) && !row[d].is_zero())
                    throw std::runtime_error("omega_tilde_eigenvalues: X^" + std::to_string(j) +
                                             " is not an eigenvector");
            ev[k - 1][j - 1] = row[t.x(j)];
        }
    }
    return ev;
}

}  // namespace griesslab
