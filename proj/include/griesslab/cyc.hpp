#pragma once

#include "griesslab/rat.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace griesslab {

// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1},
// reduced modulo the N-th cyclotomic polynomial.
class Cyc {
public:
    Cyc() : n_(1), c_{Rat(0)} {}
    Cyc(const Rat& r) : n_(1), c_{r} {}
    Cyc(long v) : Cyc(Rat(v)) {}
    Cyc(int v) : Cyc(Rat(v)) {}
    Cyc(int conductor, std::vector<Rat> coeffs);

    static Cyc root_of_unity(int n, long k);

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Cyc lift(int m) const;                    // m must be a multiple of conductor()
    std::optional<Cyc> descend(int m) const;  // express in Q(zeta_m) if possible
    Cyc minimal() const;                      // smallest conductor dividing n_ that holds the value

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o) { return *this *= o.inv(); }
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    Cyc operator-() const;

    Cyc inv() const;
    Cyc conj() const;

    friend bool operator==(const Cyc& a, const Cyc& b);

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rat() const;  // throws unless rational
    std::complex<double> to_complex() const;

    // "p/q" if rational, otherwise a sum of terms like "3/2*z8^3"
    std::string str() const;

private:
    int n_;
    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

long euler_phi(long n);
// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_poly(int n);

inline bool is_zero(const Cyc& c) { return c.is_zero(); }

}  // namespace griesslab
