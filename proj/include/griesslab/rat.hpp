#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace griesslab {

// Exact rational, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    static Rat parse(const std::string& s);

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rat inv() const;
    Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }
    Rat pow(int e) const;

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    long to_long() const;  // throws unless integral and in range
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    // "p/q", or "p" when q = 1
    std::string str() const;

    std::size_t hash() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat floor_div(const Rat& a);  // floor as integer Rat
mpz_class lcm_den(const Rat& a, const mpz_class& acc);
inline bool is_zero(const Rat& r) { return r.is_zero(); }

// Continued-fraction reconstruction of x with denominator ≤ max_den.
// Returns false if no convergent is within tol.
bool rationalize(double x, long max_den, double tol, Rat& out);

}  // namespace griesslab

template <>
struct std::hash<griesslab::Rat> {
    std::size_t operator()(const griesslab::Rat& r) const { return r.hash(); }
};
