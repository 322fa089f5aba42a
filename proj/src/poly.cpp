#include "griesslab/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace griesslab {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Rat(1));
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("Poly: monomial arity");
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(a.n_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Poly::Monomial m(a.n_);
            for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly Poly::derivative(int i) const {
    Poly r(n_);
    for (const auto& [m, c] : t_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        r.add_term(d, c * Rat(m[i]));
    }
    return r;
}

Cyc Poly::eval(const std::vector<Cyc>& x) const {
    Cyc s(0);
    for (const auto& [m, c] : t_) {
        Cyc term(c);
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= x[i];
        s += term;
    }
    return s;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& x) const {
    std::complex<double> s = 0;
    for (const auto& [m, c] : t_) {
        std::complex<double> term = c.to_double();
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= x[i];
        s += term;
    }
    return s;
}

Poly Poly::primitive() const {
    if (t_.empty()) return *this;
    mpz_class l = 1, g = 0;
    for (const auto& [m, c] : t_) l = lcm_den(c, l);
    for (const auto& [m, c] : t_) {
        mpz_class v = (c * Rat(l)).num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rat scale = Rat(l) / Rat(g);
    // sign: negative linear part if any, else positive leading term
    int sign = 0;
    for (const auto& [m, c] : t_) {
        int deg = 0;
        for (int e : m) deg += e;
        if (deg == 1) {
            sign = c.sign() < 0 ? 1 : -1;
            break;
        }
    }
    if (sign == 0) sign = t_.rbegin()->second.sign() > 0 ? 1 : -1;
    return (sign > 0 ? scale : -scale) * (*this);
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    // degree-descending, then lexicographic in the names
    std::vector<std::pair<Monomial, Rat>> v(t_.begin(), t_.end());
    auto deg = [](const Monomial& m) {
        int s = 0;
        for (int e : m) s += e;
        return s;
    };
    std::stable_sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
        if (deg(x.first) != deg(y.first)) return deg(x.first) > deg(y.first);
        return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
        bool neg = c.sign() < 0;
        Rat a = c.abs();
        if (neg) os << "-";
        else if (!first) os << "+";
        first = false;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (m[i] == 0) continue;
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) os << a;
        else if (a == Rat(1)) os << mono;
        else os << a << mono;
    }
    return os.str();
}

Poly Poly::parse(const std::string& s, const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    Poly p(n);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    };
    skip();
    if (i == s.size()) throw std::invalid_argument("Poly::parse: empty");
    while (i < s.size()) {
        skip();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip();
        }
        std::string num, den;
        read_int(num);
        if (i < s.size() && s[i] == '/') {
            ++i;
            read_int(den);
            if (den.empty()) throw std::invalid_argument("Poly::parse: bad fraction in '" + s + "'");
        }
        Rat coef = num.empty() ? Rat(1) : Rat::parse(den.empty() ? num : num + "/" + den);
        Monomial m(n, 0);
        bool any = !num.empty();
        while (i < s.size()) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
            int v = -1;
            std::size_t best = 0;
            for (int k = 0; k < n; ++k)
                if (s.compare(i, names[k].size(), names[k]) == 0 && names[k].size() > best) {
                    v = k;
                    best = names[k].size();
                }
            if (v < 0) break;
            i += best;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ex;
                read_int(ex);
                if (ex.empty()) throw std::invalid_argument("Poly::parse: bad exponent in '" + s + "'");
                e = std::stoi(ex);
            }
            m[v] += e;
            any = true;
        }
        if (!any) throw std::invalid_argument("Poly::parse: cannot parse '" + s + "' at " + std::to_string(i));
        p.add_term(m, Rat(sign) * coef);
        skip();
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("Poly::parse: unexpected '" + std::string(1, s[i]) + "' in '" + s + "'");
    }
    return p;
}

std::vector<std::string> letter_names(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    return v;
}

}  // namespace griesslab
