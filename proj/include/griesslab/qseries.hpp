#pragma once

#include "griesslab/cyc.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace griesslab {

// Truncated series sum c_e q^{e/D}; coefficients are known exactly for e < trunc
// (and absent terms there are zero). Grading is by L(0), with no -c/24 shift.
template <class T>
class QSeries {
public:
    QSeries() = default;
    QSeries(long den, long trunc) : d_(den), t_(trunc) {
        if (den <= 0) throw std::invalid_argument("QSeries: denominator must be positive");
    }
    // constant series known to order T (in q)
    static QSeries constant(const T& c, const Rat& order) {
        QSeries s(order.den().get_si(), order.num().get_si());
        s.set(0, c);
        return s;
    }
    // q^{e} with e rational, known to order T
    static QSeries monomial(const Rat& e, const Rat& order, const T& c = T(1)) {
        long den = std::lcm(e.den().get_si(), order.den().get_si());
        QSeries s(den, (order * Rat(den)).to_long());
        s.set((e * Rat(den)).to_long(), c);
        return s;
    }

    long den() const { return d_; }
    long trunc() const { return t_; }
    Rat order() const { return Rat(t_, d_); }
    const std::map<long, T>& terms() const { return c_; }

    // coefficient of q^{e/D}; throws if e is beyond the truncation
    T at(long e) const {
        if (e >= t_) throw std::out_of_range("QSeries: coefficient beyond truncation");
        auto it = c_.find(e);
        return it == c_.end() ? T(0) : it->second;
    }
    T coeff(const Rat& exponent) const {
        Rat e = exponent * Rat(d_);
        if (!e.is_integer()) return T(0);
        return at(e.to_long());
    }
    void set(long e, const T& v) {
        if (e >= t_) return;
        if (is_zero(v)) c_.erase(e);
        else c_[e] = v;
    }
    void add(long e, const T& v) {
        if (e >= t_ || is_zero(v)) return;
        auto [it, fresh] = c_.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (is_zero(it->second)) c_.erase(it);
        }
    }
    // lowest exponent with nonzero coefficient, or trunc if none
    long valuation() const { return c_.empty() ? t_ : c_.begin()->first; }

    QSeries rescaled(long den) const {
        if (den % d_) throw std::invalid_argument("QSeries: rescale to a non-multiple");
        long f = den / d_;
        QSeries r(den, t_ * f);
        for (const auto& [e, v] : c_) r.c_[e * f] = v;
        return r;
    }
    QSeries truncated(const Rat& order) const {
        long den = std::lcm(d_, order.den().get_si());
        QSeries r = rescaled(den);
        long t = (order * Rat(den)).to_long();
        if (t < r.t_) {
            r.t_ = t;
            r.c_.erase(r.c_.lower_bound(t), r.c_.end());
        }
        return r;
    }
    QSeries shifted(const Rat& e) const {  // times q^e
        long den = std::lcm(d_, e.den().get_si());
        QSeries r = rescaled(den);
        long s = (e * Rat(den)).to_long();
        QSeries out(den, r.t_ + s);
        for (const auto& [k, v] : r.c_) out.c_[k + s] = v;
        return out;
    }

    QSeries& operator*=(const T& s) {
        if (is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& [e, v] : c_) v *= s;
        return *this;
    }
    friend QSeries operator*(const T& s, QSeries a) { return a *= s; }

    friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

    friend QSeries operator*(const QSeries& a0, const QSeries& b0) {
        long den = std::lcm(a0.d_, b0.d_);
        QSeries a = a0.rescaled(den), b = b0.rescaled(den);
        long t = std::min(a.t_ + b.valuation(), b.t_ + a.valuation());
        QSeries r(den, t);
        for (const auto& [ea, va] : a.c_) {
            if (ea + b.valuation() >= t) break;
            for (const auto& [eb, vb] : b.c_) {
                if (ea + eb >= t) break;
                r.add(ea + eb, va * vb);
            }
        }
        return r;
    }

    friend QSeries operator/(const QSeries& a0, const QSeries& b0) {
        long den = std::lcm(a0.d_, b0.d_);
        QSeries a = a0.rescaled(den), b = b0.rescaled(den);
        if (b.c_.empty()) throw std::domain_error("QSeries: division by a series with zero leading term");
        long vb = b.valuation(), va = a.valuation();
        T lead_inv = T(1) / b.c_.begin()->second;
        long t = std::min(a.t_, va + b.t_ - vb) - vb;
        QSeries r(den, t);
        // r * b = a, solved from the lowest exponent upwards
        QSeries rem = a;
        while (!rem.c_.empty() && rem.c_.begin()->first - vb < t) {
            auto [e, v] = *rem.c_.begin();
            T c = v * lead_inv;
            long k = e - vb;
            r.c_[k] = c;
            for (const auto& [eb, vb2] : b.c_) {
                if (k + eb >= rem.t_) break;
                rem.add(k + eb, -(c * vb2));
            }
            rem.c_.erase(e);
        }
        return r;
    }

    // first exponent (as a rational) where a and b differ below the common order
    friend std::optional<Rat> first_difference(const QSeries& a0, const QSeries& b0) {
        long den = std::lcm(a0.d_, b0.d_);
        QSeries a = a0.rescaled(den), b = b0.rescaled(den);
        long t = std::min(a.t_, b.t_);
        auto ia = a.c_.begin();
        auto ib = b.c_.begin();
        while (true) {
            long ea = ia == a.c_.end() ? t : std::min(ia->first, t);
            long eb = ib == b.c_.end() ? t : std::min(ib->first, t);
            long e = std::min(ea, eb);
            if (e >= t) return std::nullopt;
            if (ea != eb || !(ia->second == ib->second)) return Rat(e, den);
            ++ia;
            ++ib;
        }
    }

    // "q^{4/5} + 2q^{9/5} + ..." in exponent order, with an O(q^T) tail
    std::string str(bool with_order = true) const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            std::string cs = coeff_str(v);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            bool unit = cs == "1";
            bool compound = cs.find_first_of("+-*") != std::string::npos;
            if (e == 0) {
                os << cs;
                continue;
            }
            if (!unit) os << (compound ? "(" + cs + ")" : cs);
            Rat ex(e, d_);
            os << "q";
            if (ex != Rat(1)) os << (ex.is_integer() ? "^" + ex.str() : "^{" + ex.str() + "}");
        }
        if (first) os << "0";
        if (with_order) os << " + O(q^" << (order().is_integer() ? order().str() : "{" + order().str() + "}") << ")";
        return os.str();
    }

private:
    static std::string coeff_str(const Rat& v) { return v.str(); }
    static std::string coeff_str(const Cyc& v) { return v.str(); }

    static QSeries combine(const QSeries& a0, const QSeries& b0, int sign) {
        long den = std::lcm(a0.d_, b0.d_);
        QSeries a = a0.rescaled(den), b = b0.rescaled(den);
        QSeries r(den, std::min(a.t_, b.t_));
        for (const auto& [e, v] : a.c_) r.add(e, v);
        for (const auto& [e, v] : b.c_) r.add(e, sign > 0 ? v : -v);
        return r;
    }

    long d_ = 1;
    long t_ = 0;
    std::map<long, T> c_;
};

using RatSeries = QSeries<Rat>;
using CycSeries = QSeries<Cyc>;

}  // namespace griesslab
