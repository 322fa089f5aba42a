#include "griesslab/report.hpp"

#include "griesslab/builtin.hpp"
#include "griesslab/chars.hpp"
#include "griesslab/griess.hpp"
#include "griesslab/solver.hpp"
#include "griesslab/weight2.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef GRIESS_LAB_DEFAULT_CORPUS
#define GRIESS_LAB_DEFAULT_CORPUS "corpus"
#endif

namespace griesslab {

namespace fs = std::filesystem;

namespace {

json strs(const std::vector<Cyc>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

// 12 significant digits; values below 1e-12 in size are written as 0
double round12(double x) {
    if (std::abs(x) < 1e-12) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json cplx_json(const cplx& z) { return json::array({round12(z.real()), round12(z.imag())}); }

std::string qpow(const Rat& e) { return e.is_integer() ? "q^" + e.str() : "q^{" + e.str() + "}"; }

std::string tuple_str(const std::vector<Cyc>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string rat_key(const Rat& r) { return r.str(); }

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void flatten(const json& j, const std::string& path, std::vector<std::string>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.push_back(csv_cell(path) + "," + csv_cell(j.is_string() ? j.get<std::string>() : j.dump()));
    }
}

GriessTable case_table(const CaseDescriptor& cs, bool derive) {
    return derive ? derive_griess_table(cs) : builtin_table(cs);
}

std::vector<std::pair<std::string, GriessElement>> stabilizer_vectors(const GriessTable& t) {
    std::vector<std::pair<std::string, GriessElement>> vs;
    const std::string& lab = t.cs->label;
    if (lab == "6A") vs.emplace_back("w2", GriessElement::basis(t, 1));
    if (lab == "4B") vs.emplace_back("w1", GriessElement::basis(t, 0));
    for (int j = 0; j < t.n(); ++j) {
        std::string name = j == 0 ? "e" : j == 1 ? "sigma e" : "sigma^" + std::to_string(j) + " e";
        vs.emplace_back(name, sigma_action(ehat(t), t, j));
    }
    return vs;
}

ModuleLabel checked_label(int m, int r, int s) {
    if (m < 1 || r < 1 || r > m + 1 || s < 1 || s > m + 2)
        throw std::invalid_argument("Virasoro label out of range: need m >= 1, 1 <= r <= m+1, 1 <= s <= m+2");
    return {m, r, s};
}

json series_json(const RatSeries& s) {
    json c = json::array();
    for (const auto& [e, v] : s.terms()) c.push_back(json::array({Rat(e, s.den()).str(), v.str()}));
    return c;
}

// JSON pointer escaping: "~" -> "~0", "/" -> "~1"
std::string pointer_token(const std::string& k) {
    std::string r;
    for (char c : k) r += c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c);
    return r;
}

void compare_json(const json& want, const json& got, const std::string& path, std::vector<std::string>& out) {
    if (out.size() >= 20) return;
    if (want.is_number() && got.is_number()) {
        bool same = want == got;
        if (want.is_number_float() || got.is_number_float()) {
            double a = want.get<double>(), b = got.get<double>();
            same = std::abs(a - b) <= 1e-8 * (1 + std::max(std::abs(a), std::abs(b)));
        }
        if (!same) out.push_back(path + ": corpus " + want.dump() + ", got " + got.dump());
        return;
    }
    if (want.type() != got.type()) {
        out.push_back(path + ": corpus " + want.dump() + ", got " + got.dump());
        return;
    }
    if (want.is_object()) {
        for (const auto& [k, v] : want.items()) {
            std::string p = path + "/" + pointer_token(k);
            if (!got.contains(k)) out.push_back(p + ": missing from report");
            else compare_json(v, got[k], p, out);
        }
        for (const auto& [k, v] : got.items())
            if (!want.contains(k)) out.push_back(path + "/" + pointer_token(k) + ": not in corpus");
    } else if (want.is_array()) {
        if (want.size() != got.size()) {
            out.push_back(path + ": corpus has " + std::to_string(want.size()) + " items, got " +
                          std::to_string(got.size()));
            return;
        }
        for (std::size_t i = 0; i < want.size(); ++i) compare_json(want[i], got[i], path + "/" + std::to_string(i), out);
    } else if (want != got) {
        out.push_back(path + ": corpus " + want.dump() + ", got " + got.dump());
    }
}

}  // namespace

fs::path default_corpus() {
    if (const char* p = std::getenv("GRIESS_LAB_CORPUS"); p && *p) return p;
    return GRIESS_LAB_DEFAULT_CORPUS;
}

std::string canonical_json(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> csv_rows(const json& j) {
    std::vector<std::string> rows{"key,value"};
    flatten(j, "", rows);
    return rows;
}

void emit(const Report& r, OutputFormat f, std::ostream& out) {
    switch (f) {
    case OutputFormat::Json: out << canonical_json(r.data); break;
    case OutputFormat::Csv:
        for (const auto& row : csv_rows(r.data)) out << row << "\n";
        break;
    case OutputFormat::Text:
        for (const auto& line : r.text) out << line << "\n";
        break;
    }
}

Report table_report(const std::string& case_key, bool derive) {
    const auto& cs = find_case(case_key);
    auto t = case_table(cs, derive);
    Report r;
    r.entry = "table/" + cs.label;
    r.text.push_back(cs.label + " (" + (derive ? "derived" : "built-in") + "), basis " + std::to_string(t.dim()));
    json prod = json::object();
    for (int a = 0; a < t.dim(); ++a)
        for (int b = a; b < t.dim(); ++b) {
            json terms = json::object();
            std::vector<Cyc> v(t.dim(), Cyc(0));
            for (int d = 0; d < t.dim(); ++d)
                if (!t.prod[a][b][d].is_zero()) {
                    terms[t.labels[d]] = t.prod[a][b][d].str();
                    v[d] = Cyc(t.prod[a][b][d]);
                }
            std::string key = t.labels[a] + "*" + t.labels[b];
            prod[key] = terms;
            r.text.push_back(key + " = " + GriessElement(v).str(t));
        }
    json gram = json::array();
    for (int a = 0; a < t.dim(); ++a) {
        json row = json::array();
        std::string line = "<" + t.labels[a] + ",-> :";
        for (int b = 0; b < t.dim(); ++b) {
            row.push_back(t.gram(a, b).str());
            line += " " + t.gram(a, b).str();
        }
        gram.push_back(row);
        r.text.push_back(line);
    }
    r.data = {{"case", cs.label}, {"node", cs.node}, {"basis", t.labels}, {"products", prod}, {"gram", gram}};
    return r;
}

Report mckay_report() {
    Report r;
    r.entry = "mckay";
    json vals = json::array();
    for (const auto& cs : all_cases()) {
        Rat v = mckay_value(derive_griess_table(cs));
        bool ok = v == printed_mckay_values()[cs.node];
        r.ok = r.ok && ok;
        vals.push_back({{"case", cs.label}, {"node", cs.node}, {"value", v.str()}});
        r.text.push_back(cs.label + " " + v.str() + (ok ? "" : "  (expected " + printed_mckay_values()[cs.node].str() + ")"));
    }
    r.data = {{"values", vals}};
    return r;
}

Report solve_report(const std::string& case_key, std::uint64_t seed, int parallel) {
    const auto& cs = find_case(case_key);
    if (parallel < 1) throw std::invalid_argument("--paths-parallel must be positive");
    auto t = derive_griess_table(cs);
    auto sys = polynomial_system(t);
    auto cands = printed_solutions(cs);
    SolveOptions opts;
    opts.parallel = parallel;
    auto s = enumerate(sys, seed, opts, cands);
    s.families = detect_families(sys, cs.label, s.records);
    auto h = histogram(s);

    Report r;
    r.entry = "solve/" + cs.label + "_seed" + std::to_string(seed);
    json eps = json::array();
    int nontrivial = 0;
    for (const auto& rec : s.records) {
        if (!rec.is_zero()) ++nontrivial;
        json vals = json::array();
        for (const auto& z : rec.values) vals.push_back(cplx_json(z));
        json e = {{"values", vals}, {"status", to_string(rec.status)}, {"multiplicity", rec.multiplicity}};
        if (rec.exact) e["exact"] = strs(*rec.exact);
        if (rec.exact_central_charge) e["central_charge"] = rec.exact_central_charge->str();
        else e["central_charge"] = cplx_json(rec.central_charge);
        if (rec.matched) e["printed"] = cands[*rec.matched].family;
        eps.push_back(e);
    }
    json hist = json::object();
    for (const auto& [c, k] : h.rational) hist[rat_key(c)] = k;
    json fams = json::array();
    for (const auto& f : s.families)
        fams.push_back({{"name", f.name}, {"endpoints", f.endpoints}, {"formula_verified", f.formula_verified},
                        {"details", f.details}});
    r.data = {{"case", cs.label},
              {"seed", seed},
              {"bezout", s.bezout},
              {"attempts", s.attempts},
              {"failed_paths", s.failed_paths},
              {"diverged_paths", s.diverged_paths},
              {"endpoints", eps},
              {"nontrivial", nontrivial},
              {"histogram", {{"rational", hist}, {"irrational", h.irrational}}},
              {"families", fams}};
    r.ok = s.failed_paths == 0;

    r.text.push_back(cs.label + " seed " + std::to_string(seed) + ": " + std::to_string(s.bezout) + " paths, " +
                     std::to_string(s.records.size()) + " distinct finite endpoints (" + std::to_string(nontrivial) +
                     " nontrivial), " + std::to_string(s.failed_paths) + " failed, " +
                     std::to_string(s.diverged_paths) + " diverged, " + std::to_string(s.attempts) + " attempt" +
                     (s.attempts == 1 ? "" : "s"));
    int rational = 0;
    for (const auto& [c, k] : h.rational) {
        r.text.push_back("c.c. " + c.str() + ": " + std::to_string(k));
        rational += k;
    }
    r.text.push_back("rational c.c.: " + std::to_string(rational) + ", irrational c.c.: " + std::to_string(h.irrational));
    for (const auto& f : s.families) {
        r.text.push_back("family " + f.name + ": " + std::to_string(f.endpoints) + " endpoints, formula " +
                         (f.formula_verified ? "verified" : "NOT verified"));
        for (const auto& d : f.details) r.text.push_back("  " + d);
    }
    return r;
}

Report check_solutions_report(const std::string& case_key) {
    const auto& cs = find_case(case_key);
    auto t = derive_griess_table(cs);
    auto sys = polynomial_system(t);
    Report r;
    r.entry = "solutions/" + cs.label;
    json sols = json::array();
    int bad = 0;
    for (const auto& p : printed_solutions(cs)) {
        GriessElement w(p.values);
        bool ok = verify_exact(sys, p.values) && conformal_residual(w, t).is_zero() &&
                  central_charge(w, t) == Cyc(p.central_charge);
        if (!ok) ++bad;
        sols.push_back({{"values", strs(p.values)}, {"central_charge", p.central_charge.str()},
                        {"family", p.family}, {"verified", ok}});
        r.text.push_back((ok ? "ok    " : "FAIL  ") + p.family + "  " + tuple_str(p.values));
    }
    r.ok = bad == 0;
    r.data = {{"case", cs.label}, {"basis", t.labels}, {"solutions", sols}};
    r.text.push_back(std::to_string(sols.size() - bad) + "/" + std::to_string(sols.size()) + " printed solutions verified");
    return r;
}

Report vir_char_report(int m, int r0, int s0, const Rat& order) {
    auto lab = checked_label(m, r0, s0);
    auto ch = virasoro_char(lab, order);
    Report r;
    r.entry = "char/vir_" + std::to_string(m) + "_" + std::to_string(r0) + "_" + std::to_string(s0);
    std::string name = "L(" + lab.central_charge().str() + "," + lab.weight().str() + ")";
    r.data = {{"kind", "vir"},
              {"name", name},
              {"central_charge", lab.central_charge().str()},
              {"weight", lab.weight().str()},
              {"order", order.str()},
              {"coefficients", series_json(ch)},
              {"series", ch.str()}};
    r.text = {"ch " + name + " = " + ch.str()};
    return r;
}

Report para_char_report(int level, int k, const Rat& order) {
    if (level < 1 || k < 0 || k >= level)
        throw std::invalid_argument("parafermion label out of range: need level >= 1, 0 <= k < level");
    auto ch = parafermion_char(level, k, order);
    Report r;
    r.entry = "char/para_" + std::to_string(level) + "_" + std::to_string(k);
    std::string name = "W" + std::to_string(level) + "(0," + std::to_string(2 * k) + ")";
    r.data = {{"kind", "para"},
              {"name", name},
              {"order", order.str()},
              {"coefficients", series_json(ch)},
              {"series", ch.str()}};
    r.text = {"ch " + name + " = " + ch.str()};
    return r;
}

Report verify_report(const std::string& case_key, const Rat& order) {
    const auto& cs = find_case(case_key);
    auto d = verify_decomposition(cs.label, order);
    Report r;
    r.entry = "verify/" + cs.label;
    r.ok = d.equal;
    r.data = {{"case", d.case_label}, {"kind", d.kind}, {"lhs", d.lhs},
              {"rhs", d.rhs},         {"order", order.str()}, {"equal", d.equal}};
    r.text = {cs.label + " (" + d.kind + "): " + d.lhs + " = " + d.rhs};
    if (d.equal) {
        r.text.push_back("EQUAL through " + qpow(order));
    } else {
        r.data["mismatch"] = {{"exponent", d.mismatch->str()}, {"lhs", d.lhs_coeff.str()}, {"rhs", d.rhs_coeff.str()}};
        r.text.push_back("MISMATCH at " + qpow(*d.mismatch) + ": lhs " + d.lhs_coeff.str() + ", rhs " +
                         d.rhs_coeff.str());
    }
    return r;
}

Report stabilizer_report(const std::string& case_key) {
    const auto& cs = find_case(case_key);
    auto t = builtin_table(cs);
    auto vs = stabilizer_vectors(t);
    std::vector<GriessElement> els;
    json names = json::array();
    for (const auto& [n, v] : vs) {
        els.push_back(v);
        names.push_back(n);
    }
    auto g = gram_matrix(els, t);
    auto st = gram_stabilizer(g);
    json gram = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g(i, j).str());
        gram.push_back(row);
    }
    Report r;
    r.entry = "stabilizer/" + cs.label;
    r.data = {{"case", cs.label}, {"vectors", names}, {"gram", gram}, {"order", st.order}, {"generators", st.generators}};
    std::string line = cs.label + ": stabilizer of the Gram matrix of {";
    for (std::size_t i = 0; i < vs.size(); ++i) line += (i ? ", " : "") + vs[i].first;
    r.text = {line + "} has order " + std::to_string(st.order)};
    for (const auto& gen : st.generators) {
        std::string s = "  generator:";
        for (int x : gen) s += " " + std::to_string(x);
        r.text.push_back(s);
    }
    return r;
}

Report generation_report(const std::string& case_key) {
    const auto& cs = find_case(case_key);
    auto t = builtin_table(cs);
    std::vector<GriessElement> seeds{ehat(t)};
    if (t.n() > 1) seeds.push_back(fhat(t));
    int span = generation_span(seeds, t);
    Report r;
    r.entry = "generation/" + cs.label;
    r.ok = span == t.dim();
    r.data = {{"case", cs.label}, {"dim", t.dim()}, {"span", span}};
    r.text = {cs.label + ": e^ and f^ generate a subalgebra of dimension " + std::to_string(span) + " (dim B = " +
              std::to_string(t.dim()) + ")"};
    return r;
}

std::string to_string(GoldenDiff::Status s) {
    switch (s) {
    case GoldenDiff::Status::Match: return "match";
    case GoldenDiff::Status::Missing: return "missing";
    case GoldenDiff::Status::Mismatch: return "mismatch";
    }
    return "?";
}

GoldenDiff golden_compare(const Report& r, const fs::path& corpus) {
    GoldenDiff d;
    d.entry = r.entry;
    fs::path p = corpus / (r.entry + ".json");
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        d.status = GoldenDiff::Status::Missing;
        d.diffs.push_back(r.entry + ": no corpus entry at " + p.string());
        return d;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string have = ss.str();
    if (have == canonical_json(r.data)) return d;
    json want = json::parse(have, nullptr, false);
    if (want.is_discarded()) {
        d.status = GoldenDiff::Status::Mismatch;
        d.diffs.push_back(r.entry + ": corpus entry is not valid JSON");
        return d;
    }
    std::vector<std::string> diffs;
    compare_json(want, r.data, "", diffs);
    if (!diffs.empty()) {
        d.status = GoldenDiff::Status::Mismatch;
        for (const auto& x : diffs) d.diffs.push_back(r.entry + ": " + x);
    }
    return d;
}

void golden_write(const Report& r, const fs::path& corpus) {
    fs::path p = corpus / (r.entry + ".json");
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << canonical_json(r.data);
}

}  // namespace griesslab
