#include "griesslab/e8.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace griesslab {

namespace {

constexpr std::array<std::pair<int, int>, 8> kEdges = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8},
}};

RootVec alpha_vec(int i) {
    RootVec v{};
    if (i == 0) {
        for (int j = 1; j <= 8; ++j) v[j - 1] = -kMarks[j];
    } else {
        v[i - 1] = 1;
    }
    return v;
}

std::string component_type(const std::vector<int>& nodes, std::size_t nroots) {
    int rank = static_cast<int>(nodes.size());
    std::map<int, int> deg;
    for (auto [a, b] : kEdges) {
        bool ia = std::count(nodes.begin(), nodes.end(), a) > 0;
        bool ib = std::count(nodes.begin(), nodes.end(), b) > 0;
        if (ia && ib) {
            ++deg[a];
            ++deg[b];
        }
    }
    bool branch = false;
    for (auto& [k, d] : deg) branch |= d > 2;
    if (!branch) return "A" + std::to_string(rank);
    if (nroots == static_cast<std::size_t>(2 * rank * (rank - 1))) return "D" + std::to_string(rank);
    return "E" + std::to_string(rank);
}

// Ordered components of each case, matching the omega-tilde numbering of the tables.
const std::array<std::vector<std::vector<int>>, 9> kComponentNodes = {{
    {{1, 2, 3, 4, 5, 6, 7, 8}},
    {{0}, {2, 3, 4, 5, 6, 7, 8}},
    {{0, 1}, {3, 4, 5, 6, 7, 8}},
    {{0, 1, 2}, {4, 5, 6, 7, 8}},
    {{0, 1, 2, 3}, {5, 6, 7, 8}},
    {{6, 7}, {8}, {0, 1, 2, 3, 4}},
    {{7}, {0, 1, 2, 3, 4, 5, 8}},
    {{0, 1, 2, 3, 4, 5, 6, 8}},
    {{0, 1, 2, 3, 4, 5, 6, 7}},
}};

const std::array<const char*, 9> kLabels = {"1A", "2A", "3A", "4A", "5A", "6A", "4B", "2B", "3C"};
const std::array<int, 9> kConductor = {1, 2, 3, 8, 5, 6, 8, 2, 3};

// a as coefficients of alpha_0..alpha_8
std::array<Rat, 9> a_coeffs(int i) {
    std::array<Rat, 9> c{};
    if (i == 0) {
        c[1] = Rat(1);
    } else if (i <= 5) {
        for (int j = 0; j < i; ++j) c[j] = Rat(-(j + 1), i + 1);
    } else if (i == 6) {
        for (int j = 0; j <= 5; ++j) c[j] = Rat(-(j + 1), 8);
        c[8] = Rat(-7, 8);
    } else if (i == 7) {
        c[6] = Rat(1, 2);
        c[8] = Rat(1, 2);
    } else {
        for (int j = 0; j <= 7; ++j) c[j] = Rat(-(j + 1), 9);
    }
    return c;
}

// coordinates of v in the basis {alpha_j : j != i} of L(i) (as 9-array, entry i unused)
std::array<Rat, 9> l_coords(const RootVec& v, int i) {
    std::array<Rat, 9> d{};
    if (i == 0) {
        for (int j = 1; j <= 8; ++j) d[j] = Rat(v[j - 1]);
        return d;
    }
    Rat d0 = Rat(-v[i - 1], kMarks[i]);
    d[0] = d0;
    for (int j = 1; j <= 8; ++j)
        if (j != i) d[j] = Rat(v[j - 1]) + Rat(kMarks[j]) * d0;
    return d;
}

CaseDescriptor build_case(int i) {
    CaseDescriptor cs;
    cs.node = i;
    cs.label = kLabels[i];
    cs.n = kMarks[i];
    cs.conductor = kConductor[i];
    auto ac = a_coeffs(i);
    LatticeVec a{};
    for (int j = 0; j <= 8; ++j) {
        if (ac[j].is_zero()) continue;
        RootVec aj = alpha_vec(j);
        for (int k = 0; k < 8; ++k) a[k] += ac[j] * Rat(aj[k]);
    }
    cs.a = a;

    std::vector<RootVec> l_roots;
    for (const auto& r : e8_roots())
        if (coset_of(r, cs) == 0) l_roots.push_back(r);

    std::set<int> seen;
    for (const auto& nodes : kComponentNodes[i]) {
        Component c;
        c.nodes = nodes;
        c.rank = static_cast<int>(nodes.size());
        for (const auto& r : l_roots) {
            auto d = l_coords(r, i);
            bool inside = true, any = false;
            for (int j = 0; j <= 8; ++j) {
                if (j == i || d[j].is_zero()) continue;
                any = true;
                if (std::find(nodes.begin(), nodes.end(), j) == nodes.end()) inside = false;
            }
            if (any && inside) c.roots.push_back(r);
        }
        if (c.roots.size() % c.rank)
            throw std::logic_error("component root count not divisible by rank");
        c.coxeter = static_cast<int>(c.roots.size()) / c.rank;
        c.central_charge = Rat(2 * c.rank, c.coxeter + 2);
        c.type = component_type(nodes, c.roots.size());
        for (int nd : nodes) {
            if (nd == i || !seen.insert(nd).second)
                throw std::logic_error("bad component node list");
        }
        cs.comps.push_back(std::move(c));
    }
    std::size_t total = 0;
    for (const auto& c : cs.comps) total += c.roots.size();
    if (total != l_roots.size() || seen.size() != 8)
        throw std::logic_error("components do not partition the roots of L(i)");
    return cs;
}

}  // namespace

const std::array<std::array<int, 8>, 8>& e8_gram() {
    static const auto g = [] {
        std::array<std::array<int, 8>, 8> m{};
        for (int k = 0; k < 8; ++k) m[k][k] = 2;
        for (auto [a, b] : kEdges) {
            if (a == 0) continue;
            m[a - 1][b - 1] = m[b - 1][a - 1] = -1;
        }
        return m;
    }();
    return g;
}

int pair(const RootVec& u, const RootVec& v) {
    const auto& g = e8_gram();
    int s = 0;
    for (int i = 0; i < 8; ++i) {
        if (!u[i]) continue;
        int t = 0;
        for (int j = 0; j < 8; ++j) t += g[i][j] * v[j];
        s += u[i] * t;
    }
    return s;
}

Rat pair(const LatticeVec& u, const LatticeVec& v) {
    const auto& g = e8_gram();
    Rat s(0);
    for (int i = 0; i < 8; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j)
            if (g[i][j] && !v[j].is_zero()) s += u[i] * Rat(g[i][j]) * v[j];
    }
    return s;
}

LatticeVec to_rational(const RootVec& v) {
    LatticeVec r{};
    for (int i = 0; i < 8; ++i) r[i] = Rat(v[i]);
    return r;
}

const std::vector<RootVec>& e8_roots() {
    static const std::vector<RootVec> roots = [] {
        std::set<RootVec> s;
        std::vector<RootVec> todo;
        for (int i = 1; i <= 8; ++i) {
            RootVec v = alpha_vec(i);
            s.insert(v);
            todo.push_back(v);
        }
        while (!todo.empty()) {
            RootVec v = todo.back();
            todo.pop_back();
            for (int i = 1; i <= 8; ++i) {
                RootVec a = alpha_vec(i);
                int c = pair(v, a);
                RootVec w = v;
                for (int k = 0; k < 8; ++k) w[k] -= c * a[k];
                if (s.insert(w).second) todo.push_back(w);
            }
        }
        return std::vector<RootVec>(s.begin(), s.end());
    }();
    return roots;
}

int root_index(const RootVec& v) {
    const auto& r = e8_roots();
    auto it = std::lower_bound(r.begin(), r.end(), v);
    if (it == r.end() || *it != v) return -1;
    return static_cast<int>(it - r.begin());
}

const ExtendedDiagram& extended_diagram() {
    static const ExtendedDiagram d = [] {
        ExtendedDiagram e;
        for (int i = 0; i <= 8; ++i) e.alpha[i] = alpha_vec(i);
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 8; ++j) e.gram[i][j] = pair(e.alpha[i], e.alpha[j]);
        return e;
    }();
    return d;
}

const std::vector<CaseDescriptor>& all_cases() {
    static const std::vector<CaseDescriptor> cases = [] {
        std::vector<CaseDescriptor> v;
        for (int i = 0; i <= 8; ++i) v.push_back(build_case(i));
        return v;
    }();
    return cases;
}

const CaseDescriptor& case_by_node(int node) {
    if (node < 0 || node > 8) throw std::invalid_argument("node index out of range: " + std::to_string(node));
    return all_cases()[node];
}

const CaseDescriptor& find_case(const std::string& key) {
    if (key.size() == 1 && key[0] >= '0' && key[0] <= '8') return case_by_node(key[0] - '0');
    std::string k = key;
    for (auto& ch : k) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (int i = 0; i <= 8; ++i)
        if (k == kLabels[i]) return case_by_node(i);
    throw std::invalid_argument("unknown case label: " + key);
}

int coset_of(const LatticeVec& v, const CaseDescriptor& cs) {
    for (const auto& x : v)
        if (!x.is_integer()) throw std::domain_error("coset_of: vector is not in E8");
    RootVec r{};
    for (int k = 0; k < 8; ++k) r[k] = static_cast<int>(v[k].to_long());
    return coset_of(r, cs);
}

int coset_of(const RootVec& v, const CaseDescriptor& cs) {
    if (cs.node == 0) return 0;
    int c = v[cs.node - 1] % cs.n;
    return c < 0 ? c + cs.n : c;
}

int coset_by_pairing(const RootVec& v, const CaseDescriptor& cs) {
    Rat p = Rat(-cs.n) * pair(cs.a, to_rational(v));
    if (!p.is_integer()) throw std::domain_error("coset_by_pairing: non-integral pairing");
    long j = p.to_long() % cs.n;
    return static_cast<int>(j < 0 ? j + cs.n : j);
}

std::vector<int> coset_root_counts(const CaseDescriptor& cs) {
    std::vector<int> c(cs.n, 0);
    for (const auto& r : e8_roots()) ++c[coset_of(r, cs)];
    return c;
}

std::vector<RootVec> coset_roots(const CaseDescriptor& cs, int j) {
    std::vector<RootVec> out;
    for (const auto& r : e8_roots())
        if (coset_of(r, cs) == j) out.push_back(r);
    return out;
}

}  // namespace griesslab
