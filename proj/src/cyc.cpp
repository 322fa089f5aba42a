#include "griesslab/cyc.hpp"

#include "griesslab/linalg.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace griesslab {

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

struct Field {
    std::vector<long> phi;                  // cyclotomic polynomial
    std::vector<std::vector<long>> powers;  // z^k mod phi, k = 0..n-1
};

std::vector<long> poly_divexact(std::vector<long> a, const std::vector<long>& b) {
    // b monic
    std::size_t db = b.size() - 1;
    std::vector<long> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        long c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic: inexact division");
    return q;
}

std::vector<long> compute_phi(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, compute_phi(d));
    return p;
}

const Field& field(int n) {
    static std::mutex mu;
    static std::map<int, Field> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Field f;
    std::vector<long> p = compute_phi(n);
    f.phi = p;
    std::size_t deg = p.size() - 1;
    std::vector<long> cur(deg, 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        f.powers.push_back(cur);
        // multiply by z and reduce
        std::vector<long> nxt(deg + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] += cur[i];
        long top = nxt[deg];
        for (std::size_t i = 0; i < deg; ++i) nxt[i] -= top * p[i];
        nxt.resize(deg);
        cur = nxt;
    }
    return cache.emplace(n, std::move(f)).first->second;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

const std::vector<long>& cyclotomic_poly(int n) {
    if (n < 1) throw std::domain_error("cyclotomic_poly: n < 1");
    return field(n).phi;
}

Cyc::Cyc(int conductor, std::vector<Rat> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    if (n_ < 1) throw std::domain_error("Cyc: conductor < 1");
    const auto& f = field(n_);
    std::size_t deg = f.phi.size() - 1;
    if (c_.size() > deg) {
        // fold higher powers
        std::vector<Rat> r(deg, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const auto& pw = f.powers[i % n_];
            for (std::size_t j = 0; j < deg; ++j)
                if (pw[j]) r[j] += c_[i] * Rat(pw[j]);
        }
        c_ = std::move(r);
    }
    c_.resize(deg, Rat(0));
}

Cyc Cyc::root_of_unity(int n, long k) {
    if (n < 1) throw std::domain_error("root_of_unity: n < 1");
    const auto& f = field(n);
    long e = ((k % n) + n) % n;
    std::vector<Rat> c;
    for (long v : f.powers[e]) c.emplace_back(v);
    return Cyc(n, c);
}

Cyc Cyc::lift(int m) const {
    if (m % n_) throw std::domain_error("Cyc::lift: target conductor not a multiple");
    if (m == n_) return *this;
    const auto& f = field(m);
    std::size_t deg = f.phi.size() - 1;
    std::vector<Rat> r(deg, Rat(0));
    int step = m / n_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const auto& pw = f.powers[(i * step) % m];
        for (std::size_t j = 0; j < deg; ++j)
            if (pw[j]) r[j] += c_[i] * Rat(pw[j]);
    }
    Cyc out;
    out.n_ = m;
    out.c_ = std::move(r);
    return out;
}

std::optional<Cyc> Cyc::descend(int m) const {
    if (n_ % m == 0) {
        // columns: images of zeta_m^i in Q(zeta_n)
        std::size_t dm = euler_phi(m);
        std::size_t dn = c_.size();
        Matrix<Rat> a(dn, dm);
        for (std::size_t i = 0; i < dm; ++i) {
            Cyc z = Cyc::root_of_unity(m, static_cast<long>(i)).lift(n_);
            for (std::size_t j = 0; j < dn; ++j) a(j, i) = z.c_[j];
        }
        auto x = solve_linear(a, c_);
        if (!x) return std::nullopt;
        return Cyc(m, *x);
    }
    if (m % n_ == 0) return lift(m);
    int l = lcm_int(n_, m);
    return lift(l).descend(m);
}

Cyc Cyc::minimal() const {
    if (is_rational()) return Cyc(c_[0]);
    for (int d = 2; d < n_; ++d) {
        if (n_ % d) continue;
        if (auto r = descend(d)) return *r;
    }
    return *this;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    if (n_ != o.n_) {
        int l = lcm_int(n_, o.n_);
        *this = lift(l);
        Cyc b = o.lift(l);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (o.n_ == 1) {
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (n_ == 1) {
        Rat s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        return *this;
    }
    int l = lcm_int(n_, o.n_);
    Cyc a = lift(l), b = o.lift(l);
    std::size_t d = a.c_.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    *this = Cyc(l, std::move(prod));
    return *this;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
    if (n_ == 1) return Cyc(c_[0].inv());
    std::size_t d = c_.size();
    // column i = this * z^i
    Matrix<Rat> m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Cyc col = *this * Cyc::root_of_unity(n_, static_cast<long>(i));
        for (std::size_t j = 0; j < d; ++j) m(j, i) = col.c_[j];
    }
    std::vector<Rat> e(d, Rat(0));
    e[0] = Rat(1);
    auto x = solve_linear(m, e);
    if (!x) throw std::logic_error("Cyc::inv: singular multiplication matrix");
    return Cyc(n_, *x);
}

Cyc Cyc::conj() const {
    if (n_ <= 2) return *this;
    const auto& f = field(n_);
    std::size_t d = c_.size();
    std::vector<Rat> r(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i].is_zero()) continue;
        const auto& pw = f.powers[(n_ - i) % n_];
        for (std::size_t j = 0; j < d; ++j)
            if (pw[j]) r[j] += c_[i] * Rat(pw[j]);
    }
    Cyc out;
    out.n_ = n_;
    out.c_ = std::move(r);
    return out;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    int l = lcm_int(a.n_, b.n_);
    return a.lift(l).c_ == b.lift(l).c_;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat Cyc::to_rat() const {
    if (!is_rational()) throw std::domain_error("Cyc::to_rat: not rational: " + str());
    return c_[0];
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        double ang = 2 * std::numbers::pi * static_cast<double>(i) / n_;
        s += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string Cyc::str() const {
    Cyc m = minimal();
    if (m.is_rational()) return m.c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.c_.size(); ++i) {
        const Rat& x = m.c_[i];
        if (x.is_zero()) continue;
        if (!first) os << (x.sign() > 0 ? "+" : "");
        first = false;
        if (i == 0) {
            os << x;
            continue;
        }
        if (x == Rat(-1)) os << "-";
        else if (x != Rat(1)) os << x << "*";
        os << "z" << m.n_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

}  // namespace griesslab
