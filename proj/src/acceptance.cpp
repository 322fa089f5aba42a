#include "griesslab/builtin.hpp"
#include "griesslab/chars.hpp"
#include "griesslab/griess.hpp"
#include "griesslab/report.hpp"
#include "griesslab/solver.hpp"
#include "griesslab/weight2.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

namespace griesslab {

namespace {

using Notes = std::vector<std::string>;

struct Check {
    Notes notes;
    bool ok = true;
    void fail(std::string s) {
        ok = false;
        notes.push_back(std::move(s));
    }
    void expect(bool cond, const std::string& s) {
        if (!cond) fail(s);
    }
};

std::string join(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

std::string hist_str(const std::map<Rat, int>& h) {
    std::string s = "{";
    bool first = true;
    for (const auto& [c, k] : h) {
        s += (first ? "" : ", ") + c.str() + ":" + std::to_string(k);
        first = false;
    }
    return s + "}";
}

GriessElement el(const std::vector<Cyc>& v) { return GriessElement(v); }

std::string num(const cplx& z) {
    char buf[64];
    if (std::abs(z.imag()) < 1e-12) std::snprintf(buf, sizeof buf, "%.10g", z.real());
    else std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

SolutionSet solve_case(const CaseDescriptor& cs, const RunConfig& cfg) {
    SolveOptions o;
    o.parallel = std::max(1, cfg.parallel);
    return enumerate(polynomial_system(derive_griess_table(cs)), cfg.seed, o, printed_solutions(cs));
}

Check lattice_ground_truth(const RunConfig&) {
    Check c;
    c.expect(e8_roots().size() == 240, "root count " + std::to_string(e8_roots().size()));
    const auto& d = extended_diagram();
    RootVec s{};
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k < 8; ++k) s[k] += kMarks[j] * d.alpha[j][k];
    c.expect(s == RootVec{}, "sum of marks times alpha_i is not zero");
    const std::map<std::string, std::vector<int>> want = {
        {"2A", {112}},         {"3A", {81, 81}},          {"4A", {64, 60, 64}}, {"5A", {50, 50, 50, 50}},
        {"6A", {36, 45, 40, 45, 36}}, {"4B", {56, 70, 56}}, {"2B", {128}},       {"3C", {84, 84}}};
    for (const auto& cs : all_cases()) {
        if (cs.n == 1) continue;
        auto counts = coset_root_counts(cs);
        auto t = builtin_table(cs);
        for (int j = 1; j < cs.n; ++j) {
            int w = want.at(cs.label)[j - 1];
            c.expect(counts[j] == w, cs.label + ": coset " + std::to_string(j) + " has " + std::to_string(counts[j]) +
                                         " roots, expected " + std::to_string(w));
            c.expect(t.gram(t.x(j), t.x(cs.n - j)) == Rat(counts[j]),
                     cs.label + ": printed <X" + std::to_string(j) + ",X" + std::to_string(cs.n - j) + "> = " +
                         t.gram(t.x(j), t.x(cs.n - j)).str() + ", root count " + std::to_string(counts[j]));
        }
    }
    return c;
}

Check table_derivation(const RunConfig&) {
    Check c;
    for (const auto& cs : all_cases()) {
        auto a = derive_griess_table(cs), b = builtin_table(cs);
        if (a == b) continue;
        int bad = 0;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                bad += a.gram(i, j) != b.gram(i, j);
                bad += a.prod[i][j] != b.prod[i][j];
            }
        c.fail(cs.label + ": derived table differs from the printed table in " + std::to_string(bad) + " entries");
    }
    return c;
}

Check polynomial_systems(const RunConfig&) {
    Check c;
    for (const auto& cs : all_cases()) {
        auto printed = printed_system(cs);
        if (printed.empty()) continue;
        auto diffs = compare_systems(polynomial_system(derive_griess_table(cs)), printed,
                                     printed_central_charge_form(cs));
        for (const auto& d : diffs) c.fail(cs.label + ": " + d);
    }
    return c;
}

Check mckay_values(const RunConfig&) {
    Check c;
    const Rat want[9] = {Rat(1, 4),    Rat(1, 32),  Rat(13, 1024), Rat(1, 128), Rat(3, 512),
                         Rat(5, 1024), Rat(1, 256), Rat(0),        Rat(1, 256)};
    for (const auto& cs : all_cases()) {
        Rat a = mckay_value(derive_griess_table(cs)), b = mckay_value(builtin_table(cs));
        c.expect(a == want[cs.node] && b == want[cs.node],
                 cs.label + ": <e^,f^> derived " + a.str() + ", printed table " + b.str() + ", expected " +
                     want[cs.node].str());
    }
    return c;
}

Check solution_lists(const RunConfig& cfg) {
    Check c;
    for (const auto& cs : all_cases()) {
        auto t = derive_griess_table(cs);
        auto sys = polynomial_system(t);
        for (const auto& p : printed_solutions(cs)) {
            bool ok = verify_exact(sys, p.values) && central_charge(el(p.values), t) == Cyc(p.central_charge);
            c.expect(ok, cs.label + ": printed solution " + p.family + " does not verify");
        }
    }
    for (const char* lab : {"2A", "3A", "4B", "2B", "3C"}) {
        const auto& cs = find_case(lab);
        auto sols = printed_solutions(cs);
        auto s = solve_case(cs, cfg);
        std::vector<int> hit(sols.size(), 0);
        bool zero = false;
        for (const auto& r : s.records) {
            if (r.matched) {
                ++hit[*r.matched];
            } else if (r.is_zero()) {
                zero = true;
            } else {
                std::string v;
                for (const auto& z : r.values) v += (v.empty() ? "" : ", ") + num(z);
                std::string cc = r.exact_central_charge ? r.exact_central_charge->str() : num(r.central_charge);
                c.fail(std::string(lab) + ": extra endpoint (" + v + "), c.c. " + cc + ", not in the printed list");
            }
        }
        c.expect(zero, std::string(lab) + ": zero endpoint not found");
        for (std::size_t i = 0; i < sols.size(); ++i)
            c.expect(hit[i] == 1, std::string(lab) + ": printed " + sols[i].family + " found " +
                                      std::to_string(hit[i]) + " times");
        c.expect(s.failed_paths == 0, std::string(lab) + ": " + std::to_string(s.failed_paths) + " failed paths");
    }
    return c;
}

Check counts_and_histograms(const RunConfig& cfg) {
    Check c;
    {
        auto s = solve_case(find_case("5A"), cfg);
        int nontrivial = 0;
        for (const auto& r : s.records)
            if (!r.is_zero() && r.status != SolutionStatus::NumericalPositiveDimensional) ++nontrivial;
        c.expect(nontrivial == 63, "5A: " + std::to_string(nontrivial) + " nontrivial isolated solutions, expected 63");
        auto h = histogram(s);
        std::map<Rat, int> want = {{Rat(1, 2), 5},  {Rat(25, 28), 10}, {Rat(8, 7), 12},
                                   {Rat(16, 7), 1}, {Rat(25, 14), 5},  {Rat(39, 28), 10}};
        c.expect(h.rational == want, "5A: histogram " + hist_str(h.rational) + ", expected " + hist_str(want));
        int rational = 0;
        for (const auto& [cc, k] : h.rational) rational += k;
        c.expect(rational == 43, "5A: " + std::to_string(rational) + " rational c.c. vectors, expected 43");
    }
    {
        auto s = solve_case(find_case("6A"), cfg);
        int nontrivial = 0;
        for (const auto& r : s.records)
            if (!r.is_zero()) ++nontrivial;
        c.notes.push_back("6A: " + std::to_string(s.records.size()) + " distinct endpoints, " +
                          std::to_string(nontrivial) + " nontrivial");
        c.expect(nontrivial == 255 || nontrivial == 256,
                 "6A: " + std::to_string(nontrivial) + " nontrivial endpoints, expected 255 or 256");
        auto h = histogram(s);
        std::map<Rat, int> below;
        for (const auto& [cc, k] : h.rational)
            if (cc < Rat(1)) below[cc] = k;
        std::map<Rat, int> want = {{Rat(1, 2), 7},    {Rat(7, 10), 9},   {Rat(4, 5), 7},    {Rat(6, 7), 14},
                                   {Rat(25, 28), 5},  {Rat(11, 12), 6},  {Rat(14, 15), 6},  {Rat(21, 22), 6}};
        c.expect(below == want, "6A: c.c.<1 histogram " + hist_str(below) + ", expected " + hist_str(want));
    }
    {
        const auto& cs = find_case("4A");
        auto sys = polynomial_system(derive_griess_table(cs));
        auto s = solve_case(cs, cfg);
        auto fams = detect_families(sys, "4A", s.records);
        c.expect(fams.size() == 1, "4A: " + std::to_string(fams.size()) + " positive-dimensional families detected");
        for (const auto& f : fams) {
            c.expect(f.formula_verified, "4A: parametric formula not verified");
            c.expect(f.endpoints > 0, "4A: no endpoint on the family");
        }
    }
    return c;
}

Check gram_bounds(const RunConfig&) {
    Check c;
    auto sigmas = [](const GriessTable& t) {
        std::vector<GriessElement> v;
        for (int j = 0; j < t.n(); ++j) v.push_back(sigma_action(ehat(t), t, j));
        return v;
    };
    auto t6 = builtin_table(find_case("6A"));
    auto s6 = sigmas(t6);
    auto g6 = gram_matrix(s6, t6);
    const Rat circ[4] = {Rat(1, 4), Rat(5, 1024), Rat(13, 1024), Rat(1, 32)};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int d = std::min((i - j + 6) % 6, (j - i + 6) % 6);
            c.expect(g6(i, j) == Cyc(circ[d]), "6A: <sigma^i e, sigma^j e> = " + g6(i, j).str() + " at (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
        }
    auto t5 = builtin_table(find_case("5A"));
    auto g5 = gram_matrix(sigmas(t5), t5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) c.expect(g5(i, j) == Cyc(Rat(3, 512)), "5A: off-diagonal " + g5(i, j).str());
    const std::pair<const char*, long> want[] = {{"6A", 12}, {"4B", 8}, {"4A", 8}, {"3C", 6}, {"5A", 120}};
    for (auto [lab, order] : want) {
        auto r = stabilizer_report(lab);
        long got = r.data["order"].get<long>();
        c.expect(got == order, std::string(lab) + ": stabilizer order " + std::to_string(got) + ", expected " +
                                   std::to_string(order));
    }
    c.notes.push_back("5A: 120 is the Gram-stabilizer bound (all off-diagonal entries equal); |Aut U| = 10 is not computed");
    return c;
}

Check generation(const RunConfig&) {
    Check c;
    const std::pair<const char*, int> want[] = {{"2A", 3}, {"3A", 4}, {"4A", 5}, {"5A", 6},
                                                {"6A", 8}, {"4B", 5}, {"2B", 2}, {"3C", 3}};
    for (auto [lab, dim] : want) {
        auto t = builtin_table(find_case(lab));
        int span = generation_span({ehat(t), fhat(t)}, t);
        c.expect(t.dim() == dim && span == dim, std::string(lab) + ": span " + std::to_string(span) + ", dim B " +
                                                    std::to_string(t.dim()) + ", expected " + std::to_string(dim));
    }
    return c;
}

Check eigenvalue_lemmas(const RunConfig&) {
    Check c;
    int lemmas = 0, vectors = 0;
    for (const auto& cs : all_cases()) {
        auto t = builtin_table(cs);
        for (const auto& lem : decomposition_lemmas(cs)) {
            ++lemmas;
            std::vector<GriessElement> vs;
            for (const auto& v : lem.vs) vs.push_back(el(v));
            auto rep = orthogonal_decomposition_check(vs, t);
            c.expect(rep.ok, cs.label + " " + lem.name + ": not an orthogonal decomposition of the Virasoro element");
            for (const auto& f : rep.failures) c.notes.push_back(cs.label + " " + lem.name + ": " + f);
            for (std::size_t k = 0; k < vs.size() && k < rep.central_charges.size(); ++k)
                c.expect(rep.central_charges[k] == Cyc(lem.central_charges[k]),
                         cs.label + " " + lem.name + ": central charge " + rep.central_charges[k].str());
            for (const auto& h : lem.hw) {
                ++vectors;
                std::vector<Rat> got;
                bool ok = true;
                for (std::size_t k = 0; k < vs.size(); ++k) {
                    auto e = eigen_check(vs[k], el(h.v), t);
                    ok = ok && e && *e == Cyc(h.weights[k]);
                    got.push_back(e && e->is_rational() ? e->to_rat() : Rat(-1));
                }
                c.expect(ok, cs.label + " " + lem.name + " " + h.name + ": eigenvalues " + join(got) + ", expected " +
                                 join(h.weights));
            }
        }
    }
    c.expect(lemmas == 6, std::to_string(lemmas) + " decomposition lemmas, expected 6");
    c.notes.push_back(std::to_string(lemmas) + " decompositions, " + std::to_string(vectors) + " highest-weight vectors");
    return c;
}

Check characters(const RunConfig&) {
    Check c;
    for (const auto& pe : printed_parafermion_expansions()) {
        Rat T = pe.lead + Rat(static_cast<long>(pe.coeffs.size()));
        std::string name = "W" + std::to_string(pe.level) + "(0," + std::to_string(2 * pe.k) + ")";
        try {
            auto w = parafermion_char(pe.level, pe.k, T);
            c.expect(w.valuation() == (pe.lead * Rat(w.den())).to_long(), name + ": wrong leading exponent");
            for (std::size_t i = 0; i < pe.coeffs.size(); ++i) {
                Rat e = pe.lead + Rat(static_cast<long>(i));
                c.expect(w.coeff(e) == Rat(pe.coeffs[i]), name + ": coefficient of q^" + e.str() + " is " +
                                                                w.coeff(e).str() + ", printed " +
                                                                std::to_string(pe.coeffs[i]));
            }
        } catch (const std::exception& e) {
            c.fail(name + ": " + e.what());
        }
    }
    for (const auto& d : printed_dimensions()) {
        Rat T(d.n + 1);
        auto ch = virasoro_char(1, d.h1, T) * virasoro_char(9, d.h2, T);
        Rat got = ch.coeff(Rat(d.n));
        c.expect(got == Rat(d.dim), "dim [" + d.h1.str() + "," + d.h2.str() + "]_" + std::to_string(d.n) + " = " +
                                        got.str() + ", printed " + std::to_string(d.dim));
    }
    c.expect(printed_dimensions().size() == 15, "expected 15 printed dimensions");
    return c;
}

Check decomposition_identities(const RunConfig&) {
    Check c;
    const std::pair<const char*, long> cases[] = {{"3C", 20}, {"5A", 15}, {"6A", 10},
                                                  {"2B", 20}, {"2A", 20}, {"4B", 20}};
    for (auto [lab, order] : cases) {
        auto r = verify_decomposition(lab, Rat(order));
        if (r.equal) continue;
        c.fail(std::string(lab) + ": mismatch at q^" + r.mismatch->str() + " (" + r.lhs_coeff.str() + " vs " +
               r.rhs_coeff.str() + ")");
    }
    return c;
}

Check integral_enumerations(const RunConfig&) {
    Check c;
    auto R = [](long a, long b = 1) { return Rat(a, b); };
    auto g1 = virasoro_weights(1), g5 = virasoro_weights(5), g9 = virasoro_weights(9);
    using Set = std::set<std::vector<Rat>>;
    auto as_set = [](const std::vector<std::vector<Rat>>& v) { return Set(v.begin(), v.end()); };
    Set w5 = {{R(0), R(0), R(0)},          {R(1, 16), R(5, 32), R(57, 32)},   {R(1, 16), R(57, 32), R(5, 32)},
              {R(1, 2), R(3, 4), R(3, 4)}, {R(0), R(3, 4), R(13, 4)},         {R(0), R(13, 4), R(3, 4)},
              {R(1, 16), R(57, 32), R(165, 32)}, {R(1, 16), R(165, 32), R(57, 32)}, {R(1, 2), R(13, 4), R(13, 4)},
              {R(1, 2), R(0), R(15, 2)},   {R(1, 2), R(15, 2), R(0)},         {R(0), R(15, 2), R(15, 2)}};
    Set w3 = {{R(0), R(0)},          {R(0), R(8)},        {R(1, 16), R(31, 16)},
              {R(1, 16), R(175, 16)}, {R(1, 2), R(7, 2)}, {R(1, 2), R(45, 2)}};
    Set w6 = {{R(0), R(0)}, {R(5, 7), R(9, 7)}, {R(1, 7), R(34, 7)}};
    auto report = [&](const char* what, const std::vector<std::vector<Rat>>& got, const Set& want) {
        auto g = as_set(got);
        c.expect(got.size() == g.size(), std::string(what) + ": duplicate tuples");
        for (const auto& t : g)
            if (!want.count(t)) c.fail(std::string(what) + ": unexpected " + join(t));
        for (const auto& t : want)
            if (!g.count(t)) c.fail(std::string(what) + ": missing " + join(t));
    };
    report("(1/2,25/28,25/28)", integral_weight_modules({g1, g5, g5}), w5);
    report("(1/2,21/22)", integral_weight_modules({g1, g9}), w3);
    report("U' x L(25/28)", integral_weight_modules({u3a_module_weights(), g5}), w6);
    return c;
}

Check properties(const RunConfig& cfg) {
    Check c;
    for (const auto& cs : all_cases()) {
        for (bool derive : {false, true}) {
            auto t = derive ? derive_griess_table(cs) : builtin_table(cs);
            std::string tag = cs.label + (derive ? " (derived)" : "");
            for (int a = 0; a < t.dim(); ++a)
                for (int b = 0; b < t.dim(); ++b)
                    c.expect(t.prod[a][b] == t.prod[b][a], tag + ": " + t.labels[a] + "*" + t.labels[b] + " not commutative");
        }
        auto t = builtin_table(cs);
        std::vector<GriessElement> basis;
        for (int i = 0; i < t.dim(); ++i) basis.push_back(GriessElement::basis(t, i));
        using Map = std::function<GriessElement(const GriessElement&)>;
        const std::pair<const char*, Map> maps[] = {
            {"sigma", [&](const GriessElement& x) { return sigma_action(x, t); }},
            {"theta", [&](const GriessElement& x) { return theta_action(x, t); }}};
        for (const auto& [name, g] : maps)
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    c.expect(form(g(x), g(y), t) == form(x, y, t), cs.label + ": " + name + " does not preserve the form");
                    c.expect(mul(g(x), g(y), t) == g(mul(x, y, t)), cs.label + ": " + name + " does not preserve the product");
                }
        for (const auto& x : basis)
            c.expect(theta_action(sigma_action(theta_action(x, t), t), t) == sigma_action(x, t, t.n() - 1),
                     cs.label + ": theta sigma theta != sigma^-1");
    }
    Rat T(12);
    for (int l = 1; l <= 9; ++l)
        for (int k = 0; k < l; ++k) {
            try {
                auto w = parafermion_char(l, k, T);
                for (const auto& [e, v] : w.terms())
                    c.expect(v.is_integer() && v.sign() >= 0, "W" + std::to_string(l) + ": coefficient " + v.str());
            } catch (const std::exception& e) {
                c.fail("W" + std::to_string(l) + "(0," + std::to_string(2 * k) + "): " + e.what());
            }
        }
    for (int m = 1; m <= 9; ++m)
        for (int r = 1; r <= m + 1; ++r)
            for (int s = 1; s <= m + 2; ++s) {
                ModuleLabel a{m, r, s}, b{m, m + 2 - r, m + 3 - s};
                auto ca = virasoro_char(a, T);
                c.expect(a.weight() == b.weight() && !first_difference(ca, virasoro_char(b, T)),
                         "Virasoro (r,s) symmetry fails for m=" + std::to_string(m));
                for (const auto& [e, v] : ca.terms())
                    c.expect(v.is_integer() && v.sign() >= 0, "Virasoro m=" + std::to_string(m) + ": coefficient " + v.str());
            }
    auto one = canonical_json(solve_report("4B", cfg.seed, 1).data);
    auto two = canonical_json(solve_report("4B", cfg.seed, 1).data);
    auto par = canonical_json(solve_report("4B", cfg.seed, 3).data);
    c.expect(one == two, "4B: solver report differs between two runs with the same seed");
    c.expect(one == par, "4B: solver report differs between 1 and 3 worker threads");
    c.expect(canonical_json(table_report("6A", true).data) == canonical_json(table_report("6A", true).data),
             "6A: table report not reproducible");
    return c;
}

struct Criterion {
    const char* title;
    Check (*run)(const RunConfig&);
};

const Criterion kCriteria[] = {
    {"Lattice ground truth", lattice_ground_truth},
    {"Table derivation", table_derivation},
    {"Polynomial systems", polynomial_systems},
    {"McKay values", mckay_values},
    {"Solution lists", solution_lists},
    {"Counts and histograms", counts_and_histograms},
    {"Gram/automorphism bounds", gram_bounds},
    {"Generation", generation},
    {"Eigenvalue lemmas", eigenvalue_lemmas},
    {"Characters", characters},
    {"Decomposition identities", decomposition_identities},
    {"Integral-weight enumerations", integral_enumerations},
    {"Property suites", properties},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id, const RunConfig& cfg) {
    if (id < 1 || id > criterion_count()) throw std::invalid_argument("criterion must be 1.." + std::to_string(criterion_count()));
    const auto& k = kCriteria[id - 1];
    CriterionResult r{id, k.title, false, {}};
    try {
        auto c = k.run(cfg);
        r.pass = c.ok;
        r.notes = std::move(c.notes);
    } catch (const std::exception& e) {
        r.notes.push_back(std::string("exception: ") + e.what());
    }
    return r;
}

Report acceptance_report(const RunConfig& cfg) {
    Report rep;
    rep.entry = "acceptance";
    json crit = json::array();
    int passed = 0, total = 0;
    for (int id = 1; id <= criterion_count(); ++id) {
        if (cfg.criterion && cfg.criterion != id) continue;
        auto r = run_criterion(id, cfg);
        ++total;
        passed += r.pass;
        rep.ok = rep.ok && r.pass;
        crit.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"notes", r.notes}});
        std::string num = id < 10 ? " " + std::to_string(id) : std::to_string(id);
        rep.text.push_back(std::string(r.pass ? "PASS" : "FAIL") + " " + num + "  " + r.title);
        for (const auto& n : r.notes) rep.text.push_back("        " + n);
    }
    rep.data = {{"criteria", crit}, {"passed", passed}, {"total", total}};
    rep.text.push_back(std::to_string(passed) + "/" + std::to_string(total) + " criteria passed");
    return rep;
}

}  // namespace griesslab
