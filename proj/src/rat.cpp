#include "griesslab/rat.hpp"

#include <cmath>
#include <stdexcept>

namespace griesslab {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '+') t += c;
    if (t.empty()) throw std::invalid_argument("Rat::parse: empty string");
    Rat r;
    try {
        r.v_ = mpq_class(t, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    }
    if (r.v_.get_den() == 0) throw std::domain_error("Rat::parse: zero denominator");
    r.v_.canonicalize();
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    Rat r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

long Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("Rat::to_long: " + str());
    return v_.get_num().get_si();
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rat::hash() const {
    std::size_t h = std::hash<std::string>{}(v_.get_num().get_str(16));
    return h ^ (std::hash<std::string>{}(v_.get_den().get_str(16)) * 1000003u);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat floor_div(const Rat& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return Rat(q);
}

mpz_class lcm_den(const Rat& a, const mpz_class& acc) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), acc.get_mpz_t(), a.den().get_mpz_t());
    return r;
}

bool rationalize(double x, long max_den, double tol, Rat& out) {
    if (!std::isfinite(x)) return false;
    // convergents h/k
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (std::fabs(a) > 1e15) break;
        long ai = static_cast<long>(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::fabs(static_cast<double>(h1) / k1 - x) <= tol) {
            out = Rat(h1, k1);
            return true;
        }
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return false;
}

}  // namespace griesslab
