#include "griesslab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace griesslab {

bool verify_exact(const PolySystem& sys, const std::vector<Cyc>& candidate) {
    if (static_cast<int>(candidate.size()) != sys.nvars()) throw std::invalid_argument("verify_exact: arity");
    return std::all_of(sys.eqs.begin(), sys.eqs.end(), [&](const Poly& p) { return p.eval(candidate).is_zero(); });
}

std::string to_string(SolutionStatus s) {
    switch (s) {
    case SolutionStatus::ExactVerified: return "exact-verified";
    case SolutionStatus::NumericalIsolated: return "numerical-isolated";
    case SolutionStatus::NumericalPositiveDimensional: return "numerical-on-positive-dimensional-component";
    }
    return "?";
}

bool SolutionRecord::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](cplx v) { return std::abs(v) < 1e-12; });
}

namespace {

// f_i = c_i + sum_k lin[i][k] x_k + sum_{a<=b} quad[i][a][b] x_a x_b
struct Quadratic {
    int n = 0;
    std::vector<double> c;
    std::vector<std::vector<double>> lin;
    std::vector<std::vector<std::vector<double>>> quad;

    explicit Quadratic(const std::vector<Poly>& ps, int nv) : n(nv) {
        c.assign(ps.size(), 0);
        lin.assign(ps.size(), std::vector<double>(n, 0));
        quad.assign(ps.size(), std::vector<std::vector<double>>(n, std::vector<double>(n, 0)));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (const auto& [m, coef] : ps[i].terms()) {
                std::vector<int> idx;
                for (int k = 0; k < n; ++k)
                    for (int e = 0; e < m[k]; ++e) idx.push_back(k);
                double v = coef.to_double();
                if (idx.empty()) c[i] += v;
                else if (idx.size() == 1) lin[i][idx[0]] += v;
                else if (idx.size() == 2) quad[i][idx[0]][idx[1]] += v;
                else throw std::invalid_argument("solver: degree > 2");
            }
    }

    void eval(const std::vector<cplx>& x, std::vector<cplx>& f) const {
        f.assign(c.size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            cplx s = c[i];
            for (int a = 0; a < n; ++a) {
                if (lin[i][a] != 0) s += lin[i][a] * x[a];
                for (int b = a; b < n; ++b)
                    if (quad[i][a][b] != 0) s += quad[i][a][b] * x[a] * x[b];
            }
            f[i] = s;
        }
    }

    // row-major n x n
    void jac(const std::vector<cplx>& x, std::vector<cplx>& j) const {
        j.assign(c.size() * n, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (int a = 0; a < n; ++a) {
                j[i * n + a] += lin[i][a];
                for (int b = a; b < n; ++b) {
                    double q = quad[i][a][b];
                    if (q == 0) continue;
                    j[i * n + a] += q * x[b];
                    j[i * n + b] += q * x[a];
                }
            }
        }
    }
};

// Solves A y = b in place (A is n x n row-major). False if singular.
bool lu_solve(std::vector<cplx> a, std::vector<cplx>& b, int n) {
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
        if (std::abs(a[p * n + k]) < 1e-300) return false;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            std::swap(b[k], b[p]);
        }
        for (int i = k + 1; i < n; ++i) {
            cplx f = a[i * n + k] / a[k * n + k];
            if (f == cplx(0)) continue;
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
            b[i] -= f * b[k];
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        cplx s = b[k];
        for (int j = k + 1; j < n; ++j) s -= a[k * n + j] * b[j];
        b[k] = s / a[k * n + k];
    }
    return true;
}

double condition_number(const std::vector<cplx>& j, int n) {
    double norm = 0, inv_norm = 0;
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int k = 0; k < n; ++k) s += std::abs(j[i * n + k]);
        norm = std::max(norm, s);
    }
    std::vector<std::vector<cplx>> cols(n);
    for (int k = 0; k < n; ++k) {
        std::vector<cplx> e(n, 0);
        e[k] = 1;
        if (!lu_solve(j, e, n)) return INFINITY;
        cols[k] = e;
    }
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int k = 0; k < n; ++k) s += std::abs(cols[k][i]);
        inv_norm = std::max(inv_norm, s);
    }
    return norm * inv_norm;
}

double max_norm(const std::vector<cplx>& x) {
    double m = 0;
    for (auto v : x) m = std::max(m, std::abs(v));
    return m;
}

double dist(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// H(x,t) = (1-t) gamma G(x) + t F(x), G_i = x_i^2 - r_i
class Tracker {
public:
    Tracker(const Quadratic& f, std::vector<cplx> r, cplx gamma, const SolveOptions& o)
        : f_(f), r_(std::move(r)), g_(gamma), o_(o), n_(f.n) {}

    PathResult track(std::vector<cplx> x) const {
        PathResult res;
        double t = 0, h = 0.05;
        const double t_end = 1 - 1e-6, h_min = 1e-7 * 1e-3, h_max = 0.1;
        std::vector<cplx> dx, xp;
        while (t < t_end) {
            if (h > t_end - t) h = t_end - t;
            ++res.steps;
            res.t = t;
            if (res.steps > 200000) return res;
            if (!tangent(x, t, dx)) {
                h *= 0.5;
                if (h < h_min) return res;
                continue;
            }
            xp = x;
            for (int i = 0; i < n_; ++i) xp[i] += h * dx[i];
            int iters = 0;
            if (correct(xp, t + h, 3, 1e-10, iters)) {
                x = xp;
                t += h;
                if (iters <= 1) h = std::min(h * 2, h_max);
                if (max_norm(x) > o_.divergence_bound) {
                    res.status = PathStatus::Diverged;
                    res.endpoint = x;
                    return res;
                }
            } else {
                h *= 0.5;
                if (h < h_min) {
                    if (max_norm(x) > 1e4) {
                        res.status = PathStatus::Diverged;
                        res.endpoint = x;
                    } else if (t > 0.999) {
                        return endgame(x, res);
                    }
                    return res;
                }
            }
        }
        res.t = t;
        return endgame(x, res);
    }

private:
    // Newton on the target system; singular endpoints converge slowly, so accept a
    // small residual when the steps stall
    PathResult endgame(std::vector<cplx> x, PathResult res) const {
        // plain Newton keeping the best iterate: near singular endpoints the
        // iteration stalls or wanders once it reaches the accuracy floor
        std::vector<cplx> fv, j, best = x;
        f_.eval(x, fv);
        double best_res = max_norm(fv);
        for (int it = 0; it < 100 && best_res > 0; ++it) {
            f_.jac(x, j);
            for (auto& v : fv) v = -v;
            if (!lu_solve(j, fv, n_)) break;
            for (int i = 0; i < n_; ++i) x[i] += fv[i];
            f_.eval(x, fv);
            double r = max_norm(fv);
            if (r < best_res) {
                best_res = r;
                best = x;
            }
        }
        res.endpoint = best;
        double nx = max_norm(best);
        if (!std::isfinite(nx) || !std::isfinite(best_res)) {
            res.status = PathStatus::Diverged;
            res.endpoint.clear();
            return res;
        }
        if (best_res > 1e-10 * (1 + nx * nx)) {
            // large endpoints at t ~ 1 are heading to infinity (e.g. along a family)
            res.status = nx > 1e2 ? PathStatus::Diverged : PathStatus::Failed;
            return res;
        }
        res.status = nx > 1e6 ? PathStatus::Diverged : PathStatus::Finite;
        return res;
    }

    void hx(const std::vector<cplx>& x, double t, std::vector<cplx>& j) const {
        f_.jac(x, j);
        for (auto& v : j) v *= t;
        for (int i = 0; i < n_; ++i) j[i * n_ + i] += (1 - t) * g_ * 2.0 * x[i];
    }
    void hval(const std::vector<cplx>& x, double t, std::vector<cplx>& h) const {
        f_.eval(x, h);
        for (int i = 0; i < n_; ++i) h[i] = t * h[i] + (1 - t) * g_ * (x[i] * x[i] - r_[i]);
    }
    bool tangent(const std::vector<cplx>& x, double t, std::vector<cplx>& dx) const {
        std::vector<cplx> j, fv;
        hx(x, t, j);
        f_.eval(x, fv);
        dx.resize(n_);
        for (int i = 0; i < n_; ++i) dx[i] = -(fv[i] - g_ * (x[i] * x[i] - r_[i]));
        return lu_solve(j, dx, n_);
    }
    bool correct(std::vector<cplx>& x, double t, int max_it, double tol, int& iters) const {
        std::vector<cplx> j, hv;
        for (iters = 0; iters < max_it; ++iters) {
            hval(x, t, hv);
            hx(x, t, j);
            for (auto& v : hv) v = -v;
            if (!lu_solve(j, hv, n_)) return false;
            double step = 0;
            for (int i = 0; i < n_; ++i) {
                x[i] += hv[i];
                step = std::max(step, std::abs(hv[i]));
            }
            if (step <= tol * (1 + max_norm(x))) {
                ++iters;
                return true;
            }
        }
        return false;
    }

    const Quadratic& f_;
    std::vector<cplx> r_;
    cplx g_;
    SolveOptions o_;
    int n_;
};

cplx eval_cc(const Poly& cc, const std::vector<cplx>& x) { return cc.eval(x); }

bool lex_less(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

// rounded lexicographic key, so that clusters sort stably
std::vector<cplx> sort_key(const std::vector<cplx>& v) {
    std::vector<cplx> k(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        k[i] = cplx(std::round(v[i].real() * 1e6) / 1e6, std::round(v[i].imag() * 1e6) / 1e6);
    return k;
}

}  // namespace

SolutionSet enumerate(const PolySystem& sys, std::uint64_t seed, const SolveOptions& opts,
                      const std::vector<PrintedSolution>& candidates) {
    int n = sys.nvars();
    if (n > 8 || static_cast<int>(sys.eqs.size()) != n) throw std::invalid_argument("enumerate: need a square system, n <= 8");
    Quadratic f(sys.eqs, n);
    SolutionSet out;
    out.seed = seed;
    out.bezout = 1L << n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);

    for (out.attempts = 1;; ++out.attempts) {
        out.gamma = std::polar(1.0, angle(rng));
        std::vector<cplx> r(n), sq(n);
        for (int i = 0; i < n; ++i) {
            r[i] = std::polar(1.0, angle(rng));
            sq[i] = std::sqrt(r[i]);
        }
        Tracker tr(f, r, out.gamma, opts);
        out.paths.assign(out.bezout, {});
        auto run = [&](long begin, long step) {
            for (long p = begin; p < out.bezout; p += step) {
                std::vector<cplx> x0(n);
                for (int i = 0; i < n; ++i) x0[i] = (p >> i) & 1 ? -sq[i] : sq[i];
                out.paths[p] = tr.track(x0);
            }
        };
        int threads = std::max(1, opts.parallel);
        if (threads == 1) {
            run(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int k = 0; k < threads; ++k) pool.emplace_back(run, k, threads);
            for (auto& th : pool) th.join();
        }
        out.failed_paths = static_cast<int>(
            std::count_if(out.paths.begin(), out.paths.end(), [](const PathResult& p) { return p.status == PathStatus::Failed; }));
        if (out.failed_paths <= 0.005 * out.bezout || out.attempts > opts.max_retries) break;
    }
    out.diverged_paths = static_cast<int>(
        std::count_if(out.paths.begin(), out.paths.end(), [](const PathResult& p) { return p.status == PathStatus::Diverged; }));

    // cluster finite endpoints
    std::vector<std::vector<cplx>> ends;
    for (const auto& p : out.paths)
        if (p.status == PathStatus::Finite) ends.push_back(p.endpoint);
    std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return lex_less(sort_key(a), sort_key(b)); });
    std::vector<SolutionRecord> recs;
    for (const auto& e : ends) {
        auto it = std::find_if(recs.begin(), recs.end(), [&](const SolutionRecord& r) { return dist(r.values, e) <= opts.dedup_tol; });
        if (it != recs.end()) {
            ++it->multiplicity;
            continue;
        }
        SolutionRecord r;
        r.values = e;
        recs.push_back(r);
    }

    std::vector<std::vector<Cyc>> cands;
    cands.push_back(std::vector<Cyc>(n, Cyc(0)));
    for (const auto& c : candidates) cands.push_back(c.values);
    for (auto& r : recs) {
        std::vector<cplx> fv, j;
        f.eval(r.values, fv);
        double x2 = 0;
        for (auto v : r.values) x2 = std::max(x2, std::norm(v));
        r.residual = max_norm(fv) / (1 + x2);
        f.jac(r.values, j);
        r.condition = condition_number(j, n);
        r.central_charge = eval_cc(sys.central_charge, r.values);
        if (r.multiplicity > 1 || r.condition > opts.condition_threshold)
            r.status = SolutionStatus::NumericalPositiveDimensional;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            std::vector<cplx> cv;
            for (const auto& c : cands[k]) cv.push_back(c.to_complex());
            if (dist(cv, r.values) > opts.dedup_tol || !verify_exact(sys, cands[k])) continue;
            r.exact = cands[k];
            r.exact_central_charge = sys.central_charge.eval(cands[k]);
            if (k > 0) r.matched = static_cast<int>(k - 1);
            if (r.status == SolutionStatus::NumericalIsolated) r.status = SolutionStatus::ExactVerified;
            break;
        }
    }
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) { return lex_less(sort_key(a.values), sort_key(b.values)); });
    out.records = recs;

    out.min_separation = INFINITY;
    for (std::size_t a = 0; a < recs.size(); ++a)
        for (std::size_t b = a + 1; b < recs.size(); ++b)
            if (recs[a].status != SolutionStatus::NumericalPositiveDimensional &&
                recs[b].status != SolutionStatus::NumericalPositiveDimensional)
                out.min_separation = std::min(out.min_separation, dist(recs[a].values, recs[b].values));
    return out;
}

namespace {

// p + q sqrt(D)
struct QuadNum {
    Rat p, q;
};

QuadNum qmul(const QuadNum& a, const QuadNum& b, const Rat& d) { return {a.p * b.p + a.q * b.q * d, a.p * b.q + a.q * b.p}; }

QuadNum eval_quad(const Poly& poly, const std::vector<QuadNum>& x, const Rat& d) {
    QuadNum s{Rat(0), Rat(0)};
    for (const auto& [m, c] : poly.terms()) {
        QuadNum term{c, Rat(0)};
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term = qmul(term, x[i], d);
        s.p += term.p;
        s.q += term.q;
    }
    return s;
}

}  // namespace

std::vector<FamilyReport> detect_families(const PolySystem& sys, const std::string& case_label,
                                          const std::vector<SolutionRecord>& records) {
    std::vector<FamilyReport> out;
    int singular = static_cast<int>(std::count_if(records.begin(), records.end(), [](const SolutionRecord& r) {
        return r.status == SolutionStatus::NumericalPositiveDimensional;
    }));
    if (case_label != "4A") {
        if (singular > 0) {
            FamilyReport f;
            f.name = "unidentified positive-dimensional component";
            f.endpoints = singular;
            out.push_back(f);
        }
        return out;
    }
    // ((1 +- s)/2, (1 -+ s)/2, 0, d, 0), s^2 = 1 - 240 d^2
    FamilyReport f;
    f.name = "((1+s)/2, (1-s)/2, 0, d, 0), s^2 = 1-240d^2";
    for (const auto& r : records) {
        if (r.status != SolutionStatus::NumericalPositiveDimensional) continue;
        const auto& x = r.values;
        cplx s = x[0] - x[1];
        bool on = std::abs(x[0] + x[1] - 1.0) < 1e-6 && std::abs(x[2]) < 1e-6 && std::abs(x[4]) < 1e-6 &&
                  std::abs(s * s - (1.0 - 240.0 * x[3] * x[3])) < 1e-6 && std::abs(x[3]) > 1e-9;
        if (on) ++f.endpoints;
    }
    bool all = true;
    for (Rat d : {Rat(1, 100), Rat(1, 30), Rat(1, 16)}) {
        Rat disc = Rat(1) - Rat(240) * d * d;
        for (int sign : {1, -1}) {
            std::vector<QuadNum> x = {{Rat(1, 2), Rat(sign, 2)}, {Rat(1, 2), Rat(-sign, 2)}, {Rat(0), Rat(0)},
                                      {d, Rat(0)}, {Rat(0), Rat(0)}};
            bool ok = std::all_of(sys.eqs.begin(), sys.eqs.end(), [&](const Poly& p) {
                auto v = eval_quad(p, x, disc);
                return v.p.is_zero() && v.q.is_zero();
            });
            auto cc = eval_quad(sys.central_charge, x, disc);
            bool cc_one = cc.p == Rat(1) && cc.q.is_zero();
            all = all && ok && cc_one;
            f.details.push_back("d=" + d.str() + (sign > 0 ? " (+)" : " (-)") + ": " + (ok ? "solves" : "FAILS") +
                                ", c.c. " + (cc.q.is_zero() ? cc.p.str() : "irrational"));
        }
        // a rational square root at d = 1/16: a = 5/8, b = 3/8
        if (d == Rat(1, 16)) {
            std::vector<Cyc> xs = {Cyc(Rat(5, 8)), Cyc(Rat(3, 8)), Cyc(0), Cyc(d), Cyc(0)};
            bool ok = verify_exact(sys, xs);
            all = all && ok;
            f.details.push_back(std::string("d=1/16 as rationals (5/8, 3/8, 0, 1/16, 0): ") + (ok ? "solves" : "FAILS"));
        }
    }
    f.formula_verified = all;
    out.push_back(f);
    return out;
}

Histogram histogram(const SolutionSet& s) {
    Histogram h;
    for (const auto& r : s.records) {
        if (r.is_zero() || r.status == SolutionStatus::NumericalPositiveDimensional) continue;
        if (r.exact_central_charge && r.exact_central_charge->is_rational()) {
            ++h.rational[r.exact_central_charge->to_rat()];
            continue;
        }
        Rat v;
        // reconstruction at 1e-9, then confirmation at endpoint precision
        double x = r.central_charge.real();
        if (std::abs(r.central_charge.imag()) <= 1e-9 && rationalize(x, 10000, 1e-9, v) &&
            std::abs(x - v.to_double()) <= 1e-12 * std::max(1.0, std::abs(x)))
            ++h.rational[v];
        else
            ++h.irrational;
    }
    return h;
}

}  // namespace griesslab
