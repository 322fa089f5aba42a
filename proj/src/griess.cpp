#include "griesslab/griess.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace griesslab {

GriessElement GriessElement::basis(const GriessTable& t, int idx) {
    GriessElement e = zero(t);
    e.c.at(idx) = Cyc(1);
    return e;
}

GriessElement GriessElement::from_labels(const GriessTable& t,
                                         const std::vector<std::pair<std::string, Cyc>>& terms) {
    GriessElement e = zero(t);
    for (const auto& [lab, v] : terms) {
        auto it = std::find(t.labels.begin(), t.labels.end(), lab);
        if (it == t.labels.end()) throw std::invalid_argument("unknown basis label " + lab);
        e.c[it - t.labels.begin()] += v;
    }
    return e;
}

GriessElement& GriessElement::operator+=(const GriessElement& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("GriessElement: dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

GriessElement& GriessElement::operator-=(const GriessElement& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("GriessElement: dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

GriessElement& GriessElement::operator*=(const Cyc& s) {
    for (auto& x : c) x *= s;
    return *this;
}

bool GriessElement::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Cyc& x) { return x.is_zero(); });
}

std::string GriessElement::str(const GriessTable& t) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < t.dim(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].str() << ")" << t.labels[i];
    }
    return first ? "0" : os.str();
}

GriessElement mul(const GriessElement& x, const GriessElement& y, const GriessTable& t) {
    GriessElement r = GriessElement::zero(t);
    for (int a = 0; a < t.dim(); ++a) {
        if (x.c[a].is_zero()) continue;
        for (int b = 0; b < t.dim(); ++b) {
            if (y.c[b].is_zero()) continue;
            Cyc s = x.c[a] * y.c[b];
            for (int d = 0; d < t.dim(); ++d)
                if (!t.prod[a][b][d].is_zero()) r.c[d] += s * Cyc(t.prod[a][b][d]);
        }
    }
    return r;
}

Cyc form(const GriessElement& x, const GriessElement& y, const GriessTable& t) {
    Cyc s(0);
    for (int a = 0; a < t.dim(); ++a) {
        if (x.c[a].is_zero()) continue;
        for (int b = 0; b < t.dim(); ++b)
            if (!y.c[b].is_zero() && !t.gram(a, b).is_zero()) s += x.c[a] * y.c[b] * Cyc(t.gram(a, b));
    }
    return s;
}

GriessElement conformal_residual(const GriessElement& w, const GriessTable& t) {
    return mul(w, w, t) - Cyc(2) * w;
}

Cyc central_charge(const GriessElement& w, const GriessTable& t) { return Cyc(2) * form(w, w, t); }

GriessElement ehat(const GriessTable& t) {
    GriessElement e = GriessElement::zero(t);
    for (int k = 1; k <= t.l(); ++k) e.c[t.w(k)] = Cyc(Rat(t.cs->comps[k - 1].coxeter + 2, 32));
    for (int j = 1; j < t.n(); ++j) e.c[t.x(j)] = Cyc(Rat(1, 32));
    return e;
}

GriessElement fhat(const GriessTable& t) { return sigma_action(ehat(t), t); }

GriessElement sigma_action(const GriessElement& x, const GriessTable& t, int power) {
    GriessElement r = x;
    for (int j = 1; j < t.n(); ++j) r.c[t.x(j)] *= Cyc::root_of_unity(t.n(), static_cast<long>(j) * power);
    return r;
}

GriessElement theta_action(const GriessElement& x, const GriessTable& t) {
    GriessElement r = x;
    for (int j = 1; j < t.n(); ++j) r.c[t.x(j)] = x.c[t.x(t.n() - j)];
    return r;
}

Rat mckay_value(const GriessTable& t) { return form(ehat(t), fhat(t), t).to_rat(); }

Matrix<Cyc> gram_matrix(const std::vector<GriessElement>& vs, const GriessTable& t) {
    Matrix<Cyc> g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i; j < vs.size(); ++j) g(i, j) = g(j, i) = form(vs[i], vs[j], t);
    return g;
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> seen{id};
    std::vector<Perm> todo{id};
    while (!todo.empty()) {
        Perm p = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Perm q = compose(g, p);
            if (seen.insert(q).second) todo.push_back(q);
        }
    }
    return seen;
}

}  // namespace

PermutationGroup gram_stabilizer(const Matrix<Cyc>& g) {
    int n = static_cast<int>(g.rows());
    if (n > 8) throw std::invalid_argument("gram_stabilizer: size > 8");
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> group;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i; j < n && ok; ++j) ok = g(p[i], p[j]) == g(i, j);
        if (ok) group.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    PermutationGroup r;
    r.order = static_cast<long>(group.size());
    std::set<Perm> sub = closure({}, n);
    for (const auto& q : group) {
        if (sub.count(q)) continue;
        r.generators.push_back(q);
        sub = closure(r.generators, n);
    }
    return r;
}

int generation_span(const std::vector<GriessElement>& seeds, const GriessTable& t) {
    std::vector<GriessElement> basis;
    auto try_add = [&](const GriessElement& v) {
        Matrix<Cyc> m(basis.size() + 1, t.dim());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (int d = 0; d < t.dim(); ++d) m(i, d) = basis[i].c[d];
        for (int d = 0; d < t.dim(); ++d) m(basis.size(), d) = v.c[d];
        if (rank(m) > basis.size()) {
            basis.push_back(v);
            return true;
        }
        return false;
    };
    for (const auto& s : seeds) try_add(s);
    bool grew = true;
    while (grew && static_cast<int>(basis.size()) < t.dim()) {
        grew = false;
        std::size_t n = basis.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (try_add(mul(basis[i], basis[j], t))) grew = true;
    }
    return static_cast<int>(basis.size());
}

std::optional<Cyc> eigen_check(const GriessElement& w, const GriessElement& v, const GriessTable& t) {
    if (v.is_zero()) throw std::invalid_argument("eigen_check: v = 0");
    GriessElement p = mul(w, v, t);
    int k = 0;
    while (v.c[k].is_zero()) ++k;
    Cyc lambda = p.c[k] / v.c[k];
    if (!(p == lambda * v)) return std::nullopt;
    return lambda;
}

DecompositionReport orthogonal_decomposition_check(const std::vector<GriessElement>& vs, const GriessTable& t) {
    DecompositionReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };
    GriessElement sum = GriessElement::zero(t), vir = GriessElement::zero(t);
    for (int k = 1; k <= t.l(); ++k) vir.c[t.w(k)] = Cyc(1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        r.central_charges.push_back(central_charge(vs[i], t));
        if (!conformal_residual(vs[i], t).is_zero()) fail("vector " + std::to_string(i) + " is not conformal");
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!mul(vs[i], vs[j], t).is_zero())
                fail("product of " + std::to_string(i) + " and " + std::to_string(j) + " is nonzero");
            if (!form(vs[i], vs[j], t).is_zero())
                fail("vectors " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
        }
        sum += vs[i];
    }
    if (!(sum == vir)) fail("sum is not the Virasoro element");
    return r;
}

int tau_product_order(const GriessTable& t) {
    std::vector<GriessElement> basis;
    for (int i = 0; i < t.dim(); ++i) basis.push_back(GriessElement::basis(t, i));
    for (int k = 1;; ++k) {
        bool id = std::all_of(basis.begin(), basis.end(),
                              [&](const GriessElement& b) { return sigma_action(b, t, 2 * k) == b; });
        if (id) return k;
    }
}

PolySystem polynomial_system(const GriessTable& t) {
    int n = t.dim();
    PolySystem sys;
    sys.vars = letter_names(n);
    for (int d = 0; d < n; ++d) {
        Poly p(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (t.prod[a][b][d].is_zero()) continue;
                Poly::Monomial m(n, 0);
                ++m[a];
                ++m[b];
                p.add_term(m, t.prod[a][b][d]);
            }
        p -= Rat(2) * Poly::var(n, d);
        sys.eqs.push_back(p.primitive());
    }
    Poly cc(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (t.gram(a, b).is_zero()) continue;
            Poly::Monomial m(n, 0);
            ++m[a];
            ++m[b];
            cc.add_term(m, Rat(2) * t.gram(a, b));
        }
    sys.central_charge = cc;
    return sys;
}

std::vector<std::string> compare_systems(const PolySystem& derived, const std::vector<std::string>& printed,
                                         const std::string& printed_cc) {
    std::vector<std::string> diffs;
    std::vector<Poly> want;
    for (const auto& s : printed) want.push_back(Poly::parse(s, derived.vars).primitive());
    std::vector<bool> used(want.size(), false);
    for (const auto& e : derived.eqs) {
        bool found = false;
        for (std::size_t i = 0; i < want.size() && !found; ++i)
            if (!used[i] && want[i] == e) used[i] = found = true;
        if (!found) diffs.push_back("derived equation not printed: " + e.str(derived.vars));
    }
    for (std::size_t i = 0; i < want.size(); ++i)
        if (!used[i]) diffs.push_back("printed equation not derived: " + printed[i]);
    if (!printed_cc.empty()) {
        Poly cc = Poly::parse(printed_cc, derived.vars);
        if (!(cc == derived.central_charge))
            diffs.push_back("central charge form differs: derived " + derived.central_charge.str(derived.vars) +
                            ", printed " + printed_cc);
    }
    return diffs;
}

}  // namespace griesslab
