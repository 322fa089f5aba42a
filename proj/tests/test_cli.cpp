#include "griesslab/chars.hpp"
#include "griesslab/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

using namespace griesslab;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = GRIESS_LAB_TEST_CORPUS;

struct Out {
    int status;
    std::string out, err;
};

Out cli(std::vector<std::string> args) {
    args.insert(args.begin(), "griess-lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    int st = run(static_cast<int>(argv.size()), argv.data(), o, e);
    return {st, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

json read_json(const fs::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("griess-lab-test-" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

// Rebuild the report behind a corpus entry, e.g. "char/para_6_1".
Report report_for(const std::string& entry, const json& stored) {
    auto slash = entry.find('/');
    std::string kind = entry.substr(0, slash), rest = slash == std::string::npos ? "" : entry.substr(slash + 1);
    if (kind == "mckay") return mckay_report();
    if (kind == "table") return table_report(rest, true);
    if (kind == "solutions") return check_solutions_report(rest);
    if (kind == "stabilizer") return stabilizer_report(rest);
    if (kind == "generation") return generation_report(rest);
    if (kind == "verify") return verify_report(rest, Rat::parse(stored["order"].get<std::string>()));
    if (kind == "solve") {
        auto u = rest.find("_seed");
        return solve_report(rest.substr(0, u), std::stoull(rest.substr(u + 5)), 1);
    }
    if (kind == "char") {
        std::vector<int> n;
        std::istringstream in(rest.substr(rest.find('_') + 1));
        for (std::string x; std::getline(in, x, '_');) n.push_back(std::stoi(x));
        Rat order = Rat::parse(stored["order"].get<std::string>());
        if (rest.rfind("vir", 0) == 0) return vir_char_report(n.at(0), n.at(1), n.at(2), order);
        return para_char_report(n.at(0), n.at(1), order);
    }
    throw std::invalid_argument("unknown corpus entry " + entry);
}

}  // namespace

TEST_CASE("mckay prints nine lines") {
    auto r = cli({"mckay"});
    CHECK(r.status == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 9);
    CHECK(ls.front() == "1A 1/4");
    CHECK(ls.back() == "3C 1/256");
}

TEST_CASE("verify 3C") {
    auto r = cli({"verify", "3C", "--order", "20"});
    CHECK(r.status == 0);
    CHECK(lines(r.out).back() == "EQUAL through q^20");
    auto j = cli({"verify", "8", "--order", "20", "--format", "json"});
    CHECK(json::parse(j.out)["equal"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).status == 2);
    CHECK(cli({"bogus"}).status == 2);
    CHECK(cli({"table", "7C"}).status == 2);
    CHECK(cli({"table", "9"}).status == 2);
    CHECK(cli({"table"}).status == 2);
    CHECK(cli({"table", "2A", "--derive", "--builtin"}).status == 2);
    CHECK(cli({"solve", "2B", "--seed", "abc"}).status == 2);
    CHECK(cli({"solve", "2B", "--paths-parallel", "0"}).status == 2);
    CHECK(cli({"mckay", "--format", "xml"}).status == 2);
    CHECK(cli({"char", "vir", "1", "5", "5"}).status == 2);
    CHECK(cli({"char", "para", "6"}).status == 2);
    CHECK(cli({"char", "para", "6", "1", "--order", "1/0"}).status != 0);
    CHECK(cli({"verify", "4A"}).status == 2);
    CHECK(cli({"all", "--criterion", "14"}).status == 2);
    CHECK(cli({"--help"}).status == 0);

    auto j = cli({"table", "7C", "--format", "json"});
    auto d = json::parse(j.err);
    CHECK(d["error"] == "usage");
    CHECK(d["message"].get<std::string>().find("7C") != std::string::npos);
}

TEST_CASE("case labels by node index") {
    CHECK(cli({"table", "8", "--format", "json"}).out == cli({"table", "3C", "--format", "json"}).out);
    CHECK(cli({"generation", "4"}).out == cli({"generation", "5A"}).out);
}

TEST_CASE("formats") {
    auto csv = lines(cli({"generation", "6A", "--format", "csv"}).out);
    REQUIRE(!csv.empty());
    CHECK(csv[0] == "key,value");
    CHECK(std::count(csv.begin(), csv.end(), "span,8") == 1);
    auto j = json::parse(cli({"stabilizer", "6A", "--format", "json"}).out);
    CHECK(j["order"] == 12);
    CHECK(csv_rows(json{{"a", "x,y"}}).back() == "a,\"x,y\"");
}

TEST_CASE("reports are byte-identical across runs") {
    auto a = cli({"solve", "3C", "--format", "json"});
    auto b = cli({"solve", "3C", "--format", "json", "--paths-parallel", "2"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(cli({"table", "6A", "--format", "json"}).out == cli({"table", "6A", "--format", "json"}).out);
}

TEST_CASE("golden: documented examples") {
    std::string c = kCorpus.string();
    CHECK(cli({"table", "6A", "--golden", "--corpus", c}).status == 0);
    CHECK(cli({"table", "6A", "--builtin", "--golden", "--corpus", c}).status == 0);
    auto r = cli({"char", "para", "6", "1", "--order", "41/6", "--golden", "--corpus", c});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("ch W6(0,2) = q^{5/6} + q^{11/6} + 2q^{17/6}", 0) == 0);
}

TEST_CASE("golden: missing entry and corrupted entry are distinct") {
    auto empty = scratch_dir("empty");
    auto rep = table_report("6A", false);
    auto miss = golden_compare(rep, empty);
    CHECK(miss.status == GoldenDiff::Status::Missing);
    auto m = cli({"table", "6A", "--golden", "--corpus", empty.string()});
    CHECK(m.status == 1);
    CHECK(m.err.find("golden missing") != std::string::npos);

    auto bad = scratch_dir("corrupt");
    fs::create_directories(bad / "table");
    std::string s = slurp(kCorpus / "table/6A.json");
    auto pos = s.find("\"5/8\"");
    REQUIRE(pos != std::string::npos);
    s.replace(pos, 5, "\"5/9\"");
    std::ofstream(bad / "table/6A.json", std::ios::binary) << s;
    auto d = golden_compare(rep, bad);
    CHECK(d.status == GoldenDiff::Status::Mismatch);
    REQUIRE(!d.diffs.empty());
    CHECK(d.diffs[0].rfind("table/6A: ", 0) == 0);
    auto c = cli({"table", "6A", "--golden", "--corpus", bad.string()});
    CHECK(c.status == 1);
    CHECK(c.err.find("golden mismatch") != std::string::npos);
    CHECK(c.err.find("table/6A") != std::string::npos);

    std::ofstream(bad / "table/6A.json", std::ios::binary) << "{not json";
    CHECK(golden_compare(rep, bad).status == GoldenDiff::Status::Mismatch);
    fs::remove_all(empty);
    fs::remove_all(bad);
}

TEST_CASE("golden: endpoints compare with tolerance") {
    auto rep = solve_report("2B", 0, 1);
    auto dir = scratch_dir("tol");
    golden_write(rep, dir);
    CHECK(golden_compare(rep, dir).status == GoldenDiff::Status::Match);
    json j = rep.data;
    double& x = j["endpoints"][1]["values"][0][0].get_ref<double&>();
    x += 1e-11;
    std::ofstream(dir / (rep.entry + ".json"), std::ios::binary) << canonical_json(j);
    CHECK(golden_compare(rep, dir).status == GoldenDiff::Status::Match);
    x += 1e-4;
    std::ofstream(dir / (rep.entry + ".json"), std::ios::binary) << canonical_json(j);
    CHECK(golden_compare(rep, dir).status == GoldenDiff::Status::Mismatch);
    fs::remove_all(dir);
}

TEST_CASE("GRIESS_LAB_CORPUS overrides the corpus path") {
    setenv("GRIESS_LAB_CORPUS", "/nonexistent/corpus", 1);
    CHECK(default_corpus() == fs::path("/nonexistent/corpus"));
    CHECK(cli({"mckay", "--golden"}).status == 1);
    setenv("GRIESS_LAB_CORPUS", kCorpus.string().c_str(), 1);
    CHECK(cli({"mckay", "--golden"}).status == 0);
    unsetenv("GRIESS_LAB_CORPUS");
}

TEST_CASE("corpus expansions agree with the printed coefficients") {
    int seen = 0;
    for (const auto& pe : printed_parafermion_expansions()) {
        auto p = kCorpus / "char" / ("para_" + std::to_string(pe.level) + "_" + std::to_string(pe.k) + ".json");
        REQUIRE(fs::exists(p));
        auto j = read_json(p);
        std::map<Rat, std::string> got;
        for (const auto& c : j["coefficients"]) got[Rat::parse(c[0].get<std::string>())] = c[1].get<std::string>();
        for (std::size_t i = 0; i < pe.coeffs.size(); ++i) {
            Rat e = pe.lead + Rat(static_cast<long>(i));
            CAPTURE(e.str());
            if (pe.coeffs[i] == 0) CHECK(got.count(e) == 0);
            else CHECK(got[e] == std::to_string(pe.coeffs[i]));
        }
        CHECK(Rat::parse(j["order"].get<std::string>()) == pe.lead + Rat(static_cast<long>(pe.coeffs.size())));
        ++seen;
    }
    CHECK(seen == 10);
}

TEST_CASE("every corpus entry reproduces") {
    int n = 0;
    for (const auto& f : fs::recursive_directory_iterator(kCorpus)) {
        if (!f.is_regular_file() || f.path().extension() != ".json") continue;
        std::string entry = fs::relative(f.path(), kCorpus).replace_extension().generic_string();
        CAPTURE(entry);
        auto rep = report_for(entry, read_json(f.path()));
        CHECK(rep.entry == entry);
        auto d = golden_compare(rep, kCorpus);
        for (const auto& x : d.diffs) MESSAGE(x);
        CHECK(d.status == GoldenDiff::Status::Match);
        ++n;
    }
    CHECK(n >= 60);
}
