#pragma once

#include "griesslab/cyc.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace griesslab {

// Sparse polynomial with rational coefficients in a fixed number of variables.
class Poly {
public:
    using Monomial = std::vector<int>;  // exponent per variable

    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}
    static Poly constant(int nvars, const Rat& c);
    static Poly var(int nvars, int i);

    int nvars() const { return n_; }
    const std::map<Monomial, Rat>& terms() const { return t_; }
    int degree() const;
    bool is_zero() const { return t_.empty(); }

    void add_term(const Monomial& m, const Rat& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative(int i) const;
    Cyc eval(const std::vector<Cyc>& x) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

    // scale to a primitive integer polynomial; the sign makes the linear part
    // negative (if there is one), otherwise the leading term positive
    Poly primitive() const;

    // e.g. "a^2+112c^2-a", with variables named by names
    std::string str(const std::vector<std::string>& names) const;
    // Parses sums of terms like "3/2ab", "-15d^2", "a*c". Throws std::invalid_argument.
    static Poly parse(const std::string& s, const std::vector<std::string>& names);

private:
    int n_ = 0;
    std::map<Monomial, Rat> t_;
};

struct PolySystem {
    std::vector<std::string> vars;
    std::vector<Poly> eqs;
    Poly central_charge;
    int nvars() const { return static_cast<int>(vars.size()); }
};

// a, b, c, ... as in the printed systems
std::vector<std::string> letter_names(int n);

}  // namespace griesslab
