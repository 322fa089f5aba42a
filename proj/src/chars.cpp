#include "griesslab/chars.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace griesslab {

namespace {

long ceil_long(const Rat& r) { return floor_div(r).to_long() + (r.is_integer() ? 0 : 1); }

// [n]_a = a^{n-1} + a^{n-3} + ... + a^{1-n}
Cyc q_integer(long n, long a_exp, int conductor) {
    if (n == 0) return Cyc(0);
    if (n < 0) return -q_integer(-n, a_exp, conductor);
    Cyc s(0);
    for (long i = 0; i < n; ++i) s += Cyc::root_of_unity(conductor, a_exp * (n - 1 - 2 * i));
    return s;
}

}  // namespace

RatSeries euler_inverse(const Rat& order) {
    long t = ceil_long(order);
    std::vector<Rat> p(std::max(t, 1L), Rat(0));
    p[0] = Rat(1);
    for (long n = 1; n < t; ++n)
        for (long i = n; i < t; ++i) p[i] += p[i - n];
    RatSeries s(1, t);
    for (long i = 0; i < t; ++i) s.set(i, p[i]);
    return s.truncated(order);
}

RatSeries euler_product(const Rat& order) {
    long t = ceil_long(order);
    std::vector<Rat> p(std::max(t, 1L), Rat(0));
    p[0] = Rat(1);
    for (long n = 1; n < t; ++n)
        for (long i = t - 1; i >= n; --i) p[i] -= p[i - n];
    RatSeries s(1, t);
    for (long i = 0; i < t; ++i) s.set(i, p[i]);
    return s.truncated(order);
}

CycSeries theta_rank1(long m, long n, const Rat& z, const Rat& order) {
    if (m <= 0) throw std::invalid_argument("theta_rank1: m must be positive");
    // j = (n + 2mk)/2m, m j^2 = (n+2mk)^2/4m, m z j = z (n+2mk)/2
    long sd = std::lcm(4 * m, order.den().get_si());
    CycSeries s(sd, (order * Rat(sd)).to_long());
    long zn = z.num().get_si(), zd = z.den().get_si();
    long kmax = static_cast<long>(std::sqrt(static_cast<double>(4 * m) * order.to_double()) / (2 * m)) + 2;
    for (long k = -kmax - std::abs(n); k <= kmax + std::abs(n); ++k) {
        long v = n + 2 * m * k;
        Rat e = Rat(v * v, 4 * m);
        if (e >= order) continue;
        // e^{2 pi i z v / 2} = zeta_{2 zd}^{zn v}
        s.add((e * Rat(sd)).to_long(), Cyc::root_of_unity(2 * zd, zn * v));
    }
    return s;
}

CycSeries affine_twisted_trace(int level, const Rat& z, const Rat& order) {
    if (level < 1) throw std::invalid_argument("affine_twisted_trace: level >= 1");
    // a = e^{pi i z} = zeta_{2 zd}^{zn}
    long zn = z.num().get_si(), zd = z.den().get_si();
    int cond = static_cast<int>(2 * zd);
    long t = ceil_long(order);
    CycSeries num(1, t), den(1, t);
    long l2 = level + 2;
    for (long m = -t - 1; m <= t + 1; ++m) {
        long e1 = l2 * m * m + m;
        if (e1 >= 0 && e1 < t) num.add(e1, q_integer(2 * l2 * m + 1, zn, cond));
        long e2 = 2 * m * m + m;
        if (e2 >= 0 && e2 < t) den.add(e2, q_integer(4 * m + 1, zn, cond));
    }
    return (num / den).truncated(order);
}

RatSeries lattice_coset_char(int level, int k, const Rat& order) {
    if (level < 1 || k < 0 || k >= 2 * level) throw std::invalid_argument("lattice_coset_char: bad label");
    // weights (2 l n + k)^2 / 4l
    long den = 4L * level;
    long sd = std::lcm(den, order.den().get_si());
    RatSeries th(sd, (order * Rat(sd)).to_long());
    long nmax = static_cast<long>(std::sqrt(order.to_double() / level)) + 2;
    for (long n = -nmax; n <= nmax; ++n) {
        long v = 2L * level * n + k;
        Rat e(v * v, den);
        if (e < order) th.add((e * Rat(sd)).to_long(), Rat(1));
    }
    return th * euler_inverse(order);
}

RatSeries parafermion_char(int level, int k, const Rat& order) {
    if (level < 1 || k < 0 || k >= level) throw std::invalid_argument("parafermion_char: need 0 <= k < level");
    // lowest weight of V_{(2k/2l) gamma + Z gamma}
    Rat lead(std::min<long>(k, level - k) * std::min<long>(k, level - k), level);
    Rat work = order + Rat(ceil_long(lead) + 1);
    CycSeries avg(1, ceil_long(work));
    for (int j = 0; j < level; ++j) {
        CycSeries tr = affine_twisted_trace(level, Rat(j, level), work);
        avg = avg + Cyc::root_of_unity(level, static_cast<long>(k) * j) * tr;
    }
    avg *= Cyc(Rat(1, level));
    RatSeries prod(avg.den(), avg.trunc());
    for (const auto& [e, c] : avg.terms()) {
        if (!c.is_rational())
            throw std::runtime_error("parafermion_char: irrational coefficient " + c.str() + " at q^" +
                                     Rat(e, avg.den()).str());
        prod.set(e, c.to_rat());
    }
    RatSeries w = (prod / lattice_coset_char(level, 2 * k, work)).truncated(order);
    if (w.order() < order) throw std::logic_error("parafermion_char: insufficient working order");
    for (const auto& [e, c] : w.terms())
        if (!c.is_integer() || c.sign() < 0)
            throw std::runtime_error("parafermion_char: coefficient " + c.str() + " at q^" + Rat(e, w.den()).str() +
                                     " of W_" + std::to_string(level) + "(0," + std::to_string(2 * k) +
                                     ") is not a nonnegative integer");
    return w;
}

Rat unitary_central_charge(int m) { return Rat(1) - Rat(6, static_cast<long>(m + 2) * (m + 3)); }

int unitary_index(const Rat& c) {
    for (int m = 1; m <= 200; ++m)
        if (unitary_central_charge(m) == c) return m;
    throw std::invalid_argument("not a unitary central charge: " + c.str());
}

Rat ModuleLabel::central_charge() const { return unitary_central_charge(m); }

Rat ModuleLabel::weight() const {
    long p = m + 2, pp = m + 3;
    long v = r * pp - s * p;
    return Rat(v * v - 1, 4 * p * pp);
}

ModuleLabel label_for_weight(int m, const Rat& h) {
    for (int r = 1; r <= m + 1; ++r)
        for (int s = 1; s <= m + 2; ++s)
            if (ModuleLabel{m, r, s}.weight() == h) return {m, r, s};
    throw std::invalid_argument("weight " + h.str() + " is not in the grid m=" + std::to_string(m));
}

std::vector<Rat> virasoro_weights(int m) {
    std::set<Rat> hs;
    for (int r = 1; r <= m + 1; ++r)
        for (int s = 1; s <= m + 2; ++s) hs.insert(ModuleLabel{m, r, s}.weight());
    return {hs.begin(), hs.end()};
}

RatSeries virasoro_char(const ModuleLabel& lab, const Rat& order) {
    int m = lab.m;
    if (m < 1 || lab.r < 1 || lab.r > m + 1 || lab.s < 1 || lab.s > m + 2)
        throw std::invalid_argument("virasoro_char: label outside the unitary grid");
    long p = m + 2, pp = m + 3, D = 4 * p * pp;
    long sd = std::lcm(D, order.den().get_si());
    RatSeries num(sd, (order * Rat(sd)).to_long());
    long kmax = static_cast<long>(std::sqrt(order.to_double() / (p * pp))) + 2;
    for (long k = -kmax; k <= kmax; ++k) {
        long a = 2 * p * pp * k + pp * lab.r - p * lab.s;
        long b = 2 * p * pp * k + pp * lab.r + p * lab.s;
        Rat ea(a * a - 1, D), eb(b * b - 1, D);
        if (ea < order) num.add((ea * Rat(sd)).to_long(), Rat(1));
        if (eb < order) num.add((eb * Rat(sd)).to_long(), Rat(-1));
    }
    return num * euler_inverse(order);
}

RatSeries virasoro_char(int m, const Rat& h, const Rat& order) { return virasoro_char(label_for_weight(m, h), order); }

std::vector<std::vector<Rat>> integral_weight_modules(const std::vector<std::vector<Rat>>& grids) {
    std::set<std::vector<Rat>> out;
    std::vector<Rat> cur;
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat sum) {
        if (i == grids.size()) {
            if (sum.is_integer()) out.insert(cur);
            return;
        }
        std::set<Rat> seen(grids[i].begin(), grids[i].end());
        for (const auto& h : seen) {
            cur.push_back(h);
            rec(i + 1, sum + h);
            cur.pop_back();
        }
    };
    rec(0, Rat(0));
    return {out.begin(), out.end()};
}

std::vector<Rat> u3a_module_weights() {
    // orbit partners: for c = 4/5, 0 <-> 2/3 and 2/5 <-> 1/15; for c = 6/7,
    // 0 <-> 4/3, 1/7 <-> 10/21, 5/7 <-> 1/21
    const std::pair<Rat, Rat> a[] = {{Rat(0), Rat(2, 3)}, {Rat(2, 5), Rat(1, 15)}};
    const std::pair<Rat, Rat> b[] = {{Rat(0), Rat(4, 3)}, {Rat(1, 7), Rat(10, 21)}, {Rat(5, 7), Rat(1, 21)}};
    std::vector<Rat> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Rat h0 = x.first + y.first, h1 = x.second + y.second;
            if (!(h0 - h1).is_integer()) throw std::logic_error("u3a_module_weights: weights not congruent");
            out.push_back(std::min(h0, h1));
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RatSeries one(const Rat& order) { return RatSeries::constant(Rat(1), order); }

RatSeries tensor(const std::vector<RatSeries>& fs, const Rat& order) {
    RatSeries r = one(order);
    for (const auto& f : fs) r = (r * f).truncated(order);
    return r;
}

RatSeries sum(const std::vector<RatSeries>& fs, const Rat& order) {
    RatSeries r(1, ceil_long(order));
    r = r.truncated(order);
    for (const auto& f : fs) r = r + f;
    return r;
}

CharIdentityReport compare(std::string lab, std::string kind, std::string lhs_desc, std::string rhs_desc,
                            const RatSeries& lhs, const RatSeries& rhs, const Rat& order) {
    CharIdentityReport r;
    r.case_label = std::move(lab);
    r.kind = std::move(kind);
    r.lhs = std::move(lhs_desc);
    r.rhs = std::move(rhs_desc);
    r.order = order;
    RatSeries a = lhs.truncated(order), b = rhs.truncated(order);
    if (a.order() < order || b.order() < order) throw std::logic_error("verify_decomposition: insufficient order");
    r.mismatch = first_difference(a, b);
    r.equal = !r.mismatch.has_value();
    if (r.mismatch) {
        r.lhs_coeff = a.coeff(*r.mismatch);
        r.rhs_coeff = b.coeff(*r.mismatch);
    }
    return r;
}

Rat h(long a, long b = 1) { return Rat(a, b); }

}  // namespace

std::vector<std::string> decomposition_cases() { return {"2A", "3A", "4B", "3C", "5A", "6A", "2B"}; }

CharIdentityReport verify_decomposition(const std::string& label, const Rat& T) {
    auto V = [&](int m, Rat w) { return virasoro_char(m, w, T); };
    auto W = [&](int l, int k) { return parafermion_char(l, k, T); };
    auto M = [&](std::vector<RatSeries> fs) { return tensor(fs, T); };
    auto S = [&](std::vector<RatSeries> fs) { return sum(fs, T); };

    if (label == "3C") {
        const std::pair<Rat, Rat> mods[] = {{h(0), h(0)},       {h(0), h(8)},        {h(1, 2), h(7, 2)},
                                            {h(1, 2), h(45, 2)}, {h(1, 16), h(31, 16)}, {h(1, 16), h(175, 16)}};
        std::vector<RatSeries> terms;
        for (const auto& [a, b] : mods) terms.push_back(M({V(1, a), V(9, b)}));
        return compare(label, "independent", "sum of the six integral-weight L(1/2,h1) x L(21/22,h2)",
                       "ch W9(0,0) + 2 ch W9(0,6)", S(terms), W(9, 0) + Rat(2) * W(9, 3), T);
    }
    if (label == "5A") {
        const Rat tr[12][3] = {{h(0), h(0), h(0)},          {h(1, 16), h(5, 32), h(57, 32)},
                               {h(1, 16), h(57, 32), h(5, 32)}, {h(1, 2), h(3, 4), h(3, 4)},
                               {h(0), h(3, 4), h(13, 4)},     {h(0), h(13, 4), h(3, 4)},
                               {h(1, 16), h(57, 32), h(165, 32)}, {h(1, 16), h(165, 32), h(57, 32)},
                               {h(1, 2), h(13, 4), h(13, 4)}, {h(1, 2), h(0), h(15, 2)},
                               {h(1, 2), h(15, 2), h(0)},     {h(0), h(15, 2), h(15, 2)}};
        std::vector<RatSeries> terms;
        for (const auto& t : tr) terms.push_back(M({V(1, t[0]), V(5, t[1]), V(5, t[2])}));
        RatSeries rhs = M({W(5, 0), W(5, 0)}) + Rat(4) * M({W(5, 1), W(5, 2)});
        return compare(label, "independent", "sum of the twelve integral-weight [h1,h2,h3]",
                       "ch W5(0,0)^2 + 4 ch W5(0,2) ch W5(0,4)", S(terms), rhs, T);
    }
    if (label == "6A") {
        RatSeries l0 = V(1, h(0)), lh = V(1, h(1, 2));
        RatSeries w3[3] = {W(3, 0), W(3, 1), W(3, 2)};
        // W6(0,2k) x W3(0, 2k') x L(1/2, .) with k' = -k mod 3 (the pairing for sqrt2 A1)
        std::vector<RatSeries> r1;
        for (int k = 0; k < 6; ++k) r1.push_back(M({W(6, k), w3[(3 - k % 3) % 3], k % 2 ? lh : l0}));
        auto v4 = [&](Rat w) { return V(3, w); };
        auto v6 = [&](Rat w) { return V(4, w); };
        RatSeries a = v4(h(0)) + v4(h(3));
        auto U = [&](Rat b0, Rat b1, Rat partner) {
            return M({a, v6(b0) + v6(b1)}) + Rat(2) * M({v4(h(2, 3)), v6(partner)});
        };
        RatSeries r2 = S({M({U(h(0), h(5), h(4, 3)), V(5, h(0))}), M({U(h(5, 7), h(12, 7), h(1, 21)), V(5, h(9, 7))}),
                          M({U(h(1, 7), h(22, 7), h(10, 21)), V(5, h(34, 7))})});
        return compare(label, "independent", "sum_k W6(0,2k) x W3(0,-2k) x L(1/2, k/2 mod 1)",
                       "U' x L(25/28,0) + U'(5/7) x L(25/28,9/7) + U'(1/7) x L(25/28,34/7)", S(r1), r2, T);
    }
    if (label == "2B") {
        // V_{Z gamma}^+, <gamma,gamma> = 4: (theta/eta-part + twisted part)/2
        long t = ceil_long(T);
        RatSeries th(1, t);
        for (long n = -t; n <= t; ++n)
            if (2 * n * n < t) th.add(2 * n * n, Rat(1));
        // 1/prod(1+q^n) = prod(1-q^n) / prod(1-q^{2n})
        RatSeries e = euler_product(T), e2(1, t);
        for (const auto& [ex, c] : e.terms())
            if (2 * ex < t) e2.set(2 * ex, c);
        RatSeries inv_plus = (e / e2).truncated(T);
        RatSeries rhs = Rat(1, 2) * ((th * euler_inverse(T)) + inv_plus);
        return compare(label, "independent", "ch L(1/2,0)^2", "ch V_{Z gamma}^+ with <gamma,gamma> = 4",
                       M({V(1, h(0)), V(1, h(0))}), rhs, T);
    }
    if (label == "2A") {
        RatSeries lhs = M({V(1, h(0)), V(2, h(0))}) + M({V(1, h(1, 2)), V(2, h(3, 2))});
        RatSeries rhs = M({W(2, 0), V(2, h(0))}) + M({W(2, 1), V(2, h(3, 2))});
        return compare(label, "consistency", "[0,0] + [1/2,3/2]",
                       "W2(0,0) x L(7/10,0) + W2(0,2) x L(7/10,3/2)", lhs, rhs, T);
    }
    if (label == "4B") {
        auto v7 = [&](Rat w) { return V(2, w); };
        RatSeries lhs = S({M({V(1, h(0)), v7(h(0)), v7(h(0))}), M({V(1, h(1, 2)), v7(h(3, 2)), v7(h(0))}),
                           M({V(1, h(1, 2)), v7(h(0)), v7(h(3, 2))}), M({V(1, h(0)), v7(h(3, 2)), v7(h(3, 2))})});
        RatSeries rhs = S({M({V(1, h(0)), v7(h(0)), v7(h(0))}), M({V(1, h(1, 2)), v7(h(0)), v7(h(3, 2))}),
                           M({V(1, h(1, 16)), v7(h(3, 2)), v7(h(7, 16))})});
        return compare(label, "consistency", "[0,0,0] + [1/2,3/2,0] + [1/2,0,3/2] + [0,3/2,3/2]",
                       "[0,0,0] + [1/2,0,3/2] + [1/16,3/2,7/16]", lhs, rhs, T);
    }
    if (label == "3A") {
        auto v4 = [&](Rat w) { return V(3, w); };
        auto v6 = [&](Rat w) { return V(4, w); };
        RatSeries lhs = S({M({v4(h(0)), v6(h(0))}), M({v4(h(3)), v6(h(5))}), M({v4(h(2, 3)), v6(h(4, 3))}),
                           M({v4(h(13, 8)), v6(h(3, 8))}), M({v4(h(1, 8)), v6(h(23, 8))})});
        RatSeries rhs = M({v4(h(0)) + v4(h(3)), v6(h(0)) + v6(h(5))}) + Rat(2) * M({v4(h(2, 3)), v6(h(4, 3))});
        return compare(label, "consistency", "(0,0)+(3,5)+(2/3,4/3)+(13/8,3/8)+(1/8,23/8)",
                       "(L0+L3)(L0+L5) + 2 (2/3,4/3)", lhs, rhs, T);
    }
    throw std::invalid_argument("verify_decomposition: no identity for case " + label);
}

const std::vector<PrintedExpansion>& printed_parafermion_expansions() {
    static const std::vector<PrintedExpansion> v = {
        {9, 0, Rat(0), {1,   0,   1,   2,   4,   6,   11,  16,   27,   40,   62,   90,
                        137, 194, 284, 400, 569, 788, 1102, 1504, 2066, 2792, 3776, 5046}},
        {9, 3, Rat(2), {1, 1, 3, 5, 9, 14, 25, 36, 58, 86}},
        {9, 6, Rat(2), {1, 1, 3, 5, 9, 14, 25, 36, 58, 86}},
        {5, 0, Rat(0), {1, 0, 1, 2, 4, 6, 10, 14, 23, 32, 48, 66, 96, 130, 183, 246}},
        {5, 1, Rat(4, 5), {1, 1, 2, 3, 6, 8, 14, 20, 31, 43, 64, 87, 125, 169, 234, 313}},
        {5, 2, Rat(6, 5), {1, 1, 3, 4, 7, 10, 17, 23, 36, 50, 73, 100, 142, 191, 265, 353}},
        {6, 0, Rat(0), {1, 0, 1, 2, 4, 6, 11}},
        {6, 1, Rat(5, 6), {1, 1, 2, 3, 6, 9}},
        {6, 2, Rat(4, 3), {1, 1, 3, 4, 8}},
        {6, 3, Rat(3, 2), {1, 1, 3, 5, 8}},
    };
    return v;
}

const std::vector<PrintedDimension>& printed_dimensions() {
    static const std::vector<PrintedDimension> v = {
        {Rat(0), Rat(0), 2, 2},           {Rat(0), Rat(0), 4, 5},           {Rat(1, 16), Rat(31, 16), 4, 4},
        {Rat(0), Rat(0), 8, 27},          {Rat(1, 16), Rat(31, 16), 8, 36}, {Rat(1, 2), Rat(7, 2), 8, 13},
        {Rat(0), Rat(0), 11, 75},         {Rat(1, 16), Rat(31, 16), 11, 130}, {Rat(1, 2), Rat(7, 2), 11, 51},
        {Rat(0), Rat(8), 11, 5},          {Rat(0), Rat(0), 23, 3073},       {Rat(1, 16), Rat(31, 16), 23, 7040},
        {Rat(1, 2), Rat(7, 2), 23, 3510}, {Rat(0), Rat(8), 23, 946},        {Rat(1, 16), Rat(175, 16), 23, 490},
    };
    return v;
}

}  // namespace griesslab
