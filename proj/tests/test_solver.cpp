#include "griesslab/griess.hpp"
#include "griesslab/solver.hpp"

#include <doctest.h>

using namespace griesslab;

namespace {

PolySystem system_of(const char* lab) { return polynomial_system(builtin_table(find_case(lab))); }
Cyc q(long a, long b = 1) { return Cyc(Rat(a, b)); }

}  // namespace

TEST_CASE("verify_exact examples") {
    auto s4b = system_of("4B");
    CHECK(verify_exact(s4b, {q(7, 8), q(3, 16), q(1, 32), q(3, 160), q(1, 32)}));
    CHECK(!verify_exact(s4b, {q(7, 8), q(3, 16), q(1, 32), q(3, 161), q(1, 32)}));
    auto s4a = system_of("4A");
    auto z = Cyc::root_of_unity(8, 1);
    CHECK(verify_exact(s4a, {q(1, 7), q(5, 7), q(1, 28) * z, q(0), q(1, 28) * z.inv()}));
    for (const auto& cs : all_cases()) {
        auto sys = polynomial_system(builtin_table(cs));
        CHECK(verify_exact(sys, std::vector<Cyc>(sys.nvars(), Cyc(0))));
    }
    CHECK_THROWS(verify_exact(s4b, {q(0)}));
}

TEST_CASE("2B endpoints") {
    auto s = enumerate(system_of("2B"), 0, {}, printed_solutions(find_case("2B")));
    CHECK(s.bezout == 4);
    CHECK(s.failed_paths == 0);
    REQUIRE(s.records.size() == 4);
    int exact = 0;
    for (const auto& r : s.records) exact += r.exact.has_value();
    // 0, (1/2, +-1/32) and the Virasoro element (1, 0)
    CHECK(exact == 3);
    auto h = histogram(s);
    CHECK(h.rational[Rat(1, 2)] == 2);
    CHECK(h.rational[Rat(1)] == 1);
}

TEST_CASE("small cases: endpoints are exactly the printed lists") {
    const std::pair<const char*, int> want[] = {{"2A", 7}, {"3A", 15}, {"4B", 31}, {"3C", 7}, {"1A", 1}};
    for (auto [lab, n] : want) {
        CAPTURE(lab);
        const auto& cs = find_case(lab);
        auto sols = printed_solutions(cs);
        auto s = enumerate(polynomial_system(builtin_table(cs)), 0, {}, sols);
        CHECK(s.failed_paths == 0);
        CHECK(s.records.size() == static_cast<std::size_t>(n + 1));
        std::vector<int> hit(sols.size(), 0);
        for (const auto& r : s.records) {
            CHECK(r.status == SolutionStatus::ExactVerified);
            if (r.matched) ++hit[*r.matched];
            else CHECK(r.is_zero());
        }
        for (int h : hit) CHECK(h == 1);
        CHECK(s.min_separation > 1e-4);
    }
}

TEST_CASE("histogram") {
    const auto& cs = find_case("3A");
    auto s = enumerate(polynomial_system(builtin_table(cs)), 0, {}, printed_solutions(cs));
    auto h = histogram(s);
    std::map<Rat, int> want = {{Rat(1, 2), 3}, {Rat(4, 5), 4}, {Rat(6, 7), 4}, {Rat(81, 70), 3}, {Rat(58, 35), 1}};
    CHECK(h.rational == want);
    CHECK(h.irrational == 0);
    CHECK(histogram(SolutionSet{}).rational.empty());
}

TEST_CASE("determinism") {
    auto sys = system_of("4B");
    auto a = enumerate(sys, 42);
    auto b = enumerate(sys, 42);
    SolveOptions par;
    par.parallel = 3;
    auto c = enumerate(sys, 42, par);
    REQUIRE(a.records.size() == b.records.size());
    REQUIRE(a.records.size() == c.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].values == b.records[i].values);
        CHECK(a.records[i].values == c.records[i].values);
    }
    CHECK(a.gamma == b.gamma);
    auto d = enumerate(sys, 43);
    CHECK(d.gamma != a.gamma);
    CHECK(d.records.size() == a.records.size());
}

TEST_CASE("4A family") {
    const auto& cs = find_case("4A");
    auto sys = polynomial_system(builtin_table(cs));
    auto s = enumerate(sys, 0, {}, printed_solutions(cs));
    auto fams = detect_families(sys, "4A", s.records);
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].formula_verified);
    CHECK(fams[0].endpoints > 0);
    // isolated printed tuples are all found
    int isolated_matches = 0;
    for (const auto& r : s.records)
        if (r.status == SolutionStatus::ExactVerified && r.matched) ++isolated_matches;
    CHECK(isolated_matches == 17);
    auto h = histogram(s);
    CHECK(h.rational[Rat(1, 2)] == 4);
    CHECK(h.rational[Rat(6, 7)] == 4);
}

TEST_CASE("5A count and Table 1") {
    const auto& cs = find_case("5A");
    auto sys = polynomial_system(builtin_table(cs));
    auto s = enumerate(sys, 7, {}, printed_solutions(cs));
    CHECK(s.records.size() == 64);
    CHECK(detect_families(sys, "5A", s.records).empty());
    auto h = histogram(s);
    std::map<Rat, int> want = {{Rat(1, 2), 5},  {Rat(25, 28), 10}, {Rat(8, 7), 12},
                               {Rat(16, 7), 1}, {Rat(25, 14), 5},  {Rat(39, 28), 10}};
    CHECK(h.rational == want);
    CHECK(h.irrational == 20);
}
