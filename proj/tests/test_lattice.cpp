#include "doctest.h"
#include "griesslab/builtin.hpp"
#include "griesslab/weight2.hpp"

using namespace griesslab;

TEST_CASE("root system") {
    const auto& r = e8_roots();
    CHECK(r.size() == 240);
    RootVec sum{};
    for (const auto& v : r) {
        CHECK(pair(v, v) == 2);
        for (int i = 0; i < 8; ++i) sum[i] += v[i];
        RootVec m;
        for (int i = 0; i < 8; ++i) m[i] = -v[i];
        CHECK(root_index(m) >= 0);
    }
    CHECK(sum == RootVec{});
}

TEST_CASE("extended diagram") {
    const auto& d = extended_diagram();
    CHECK(d.gram[5][8] == -1);
    CHECK(d.gram[0][7] == 0);
    CHECK(d.gram[0][1] == -1);
    for (int i = 0; i <= 8; ++i) CHECK(d.gram[i][i] == 2);
    RootVec s{};
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k < 8; ++k) s[k] += kMarks[j] * d.alpha[j][k];
    CHECK(s == RootVec{});
    // -alpha_0 is the highest root: it has the largest height
    int hmax = 0;
    for (const auto& v : e8_roots()) {
        int h = 0;
        for (int x : v) h += x;
        hmax = std::max(hmax, h);
    }
    int h0 = 0;
    for (int x : d.alpha[0]) h0 -= x;
    CHECK(h0 == hmax);
}

TEST_CASE("case descriptors") {
    const std::vector<std::vector<std::string>> types = {
        {"E8"}, {"A1", "E7"}, {"A2", "E6"}, {"A3", "D5"}, {"A4", "A4"},
        {"A2", "A1", "A5"}, {"A1", "A7"}, {"D8"}, {"A8"}};
    for (const auto& cs : all_cases()) {
        CHECK(cs.n == kMarks[cs.node]);
        REQUIRE(cs.comps.size() == types[cs.node].size());
        for (std::size_t k = 0; k < cs.comps.size(); ++k) CHECK(cs.comps[k].type == types[cs.node][k]);
        CHECK(builtin_central_charges(cs).size() == cs.comps.size());
        for (std::size_t k = 0; k < cs.comps.size(); ++k)
            CHECK(cs.comps[k].central_charge == builtin_central_charges(cs)[k]);
        // pairing condition on a
        const auto& d = extended_diagram();
        for (int j = 0; j <= 8; ++j) {
            Rat p = pair(cs.a, to_rational(d.alpha[j]));
            if (j != cs.node) CHECK(p.is_integer());
            else CHECK((Rat(cs.n) * p + Rat(1)) / Rat(cs.n) == floor_div((Rat(cs.n) * p + Rat(1)) / Rat(cs.n)));
        }
        for (const auto& v : e8_roots()) CHECK(coset_of(v, cs) == coset_by_pairing(v, cs));
    }
    CHECK(find_case("5a").node == 4);
    CHECK(find_case("8").label == "3C");
    CHECK_THROWS_AS(find_case("7C"), std::invalid_argument);
    CHECK(find_case("4B").comps[1].coxeter == 8);
    CHECK(find_case("3A").comps[1].coxeter == 12);
}

TEST_CASE("coset membership") {
    const auto& d = extended_diagram();
    for (const auto& cs : all_cases()) {
        if (cs.node == 0) continue;
        CHECK(coset_of(d.alpha[cs.node], cs) == 1);
        for (int j = 0; j <= 8; ++j)
            if (j != cs.node) CHECK(coset_of(d.alpha[j], cs) == 0);
    }
    LatticeVec half{};
    half[0] = Rat(1, 2);
    CHECK_THROWS_AS(coset_of(half, find_case("2B")), std::domain_error);
}

TEST_CASE("coset root counts") {
    CHECK(coset_root_counts(find_case("2B")) == std::vector<int>{112, 128});
    CHECK(coset_root_counts(find_case("5A")) == std::vector<int>{40, 50, 50, 50, 50});
    CHECK(coset_root_counts(find_case("6A")) == std::vector<int>{38, 36, 45, 40, 45, 36});
    CHECK(coset_root_counts(find_case("3C")) == std::vector<int>{72, 84, 84});
    for (const auto& cs : all_cases()) {
        auto c = coset_root_counts(cs);
        int tot = 0;
        for (int x : c) tot += x;
        CHECK(tot == 240);
        for (int j = 1; j < cs.n; ++j) CHECK(c[j] == c[cs.n - j]);
    }
}

TEST_CASE("normalization: omega-tilde of A1") {
    const auto& cs = find_case("2A");
    auto be = build_basis_elements(cs);
    const auto& w = be.omega_tilde[0];
    CHECK(griess_form(w, w) == Rat(1, 4));
    CHECK(griess_product(w, w) == Rat(2) * w);
    // quad part (1/8) alpha(-1)^2 and expo (1/4)(e^{a} + e^{-a})
    const auto& root = cs.comps[0].roots[0];
    auto expected = Rat(1, 8) * heis_square(root);
    for (const auto& r : cs.comps[0].roots) expected += Rat(1, 4) * exp_elem(r);
    CHECK(w == expected);
}

TEST_CASE("basis elements") {
    for (const auto& cs : all_cases()) {
        auto be = build_basis_elements(cs);
        for (std::size_t k = 0; k < cs.comps.size(); ++k) {
            CHECK(be.omega_tilde[k] + be.s[k] == be.omega[k]);
            CHECK(griess_product(be.s[k], be.s[k]) == Rat(2) * be.s[k]);
            CHECK(griess_product(be.omega_tilde[k], be.s[k]) == Weight2Element{});
            for (const auto& x : be.x) {
                CHECK(griess_form(be.s[k], x) == Rat(0));
                CHECK(griess_product(be.s[k], x) == Weight2Element{});
            }
        }
        // coset root sums vanish
        for (int j = 1; j < cs.n; ++j) {
            RootVec s{};
            for (const auto& r : coset_roots(cs, j))
                for (int i = 0; i < 8; ++i) s[i] += r[i];
            CHECK(s == RootVec{});
        }
    }
}

TEST_CASE("derived tables equal the printed tables") {
    for (const auto& cs : all_cases()) {
        CAPTURE(cs.label);
        GriessTable d = derive_griess_table(cs);
        GriessTable b = builtin_table(cs);
        for (int i = 0; i < d.dim(); ++i)
            for (int j = 0; j < d.dim(); ++j) {
                CAPTURE(d.labels[i]);
                CAPTURE(d.labels[j]);
                CHECK(d.prod[i][j] == b.prod[i][j]);
                CHECK(d.gram(i, j) == b.gram(i, j));
            }
        auto counts = coset_root_counts(cs);
        for (int j = 1; j < cs.n; ++j) CHECK(d.gram(d.x(j), d.x(cs.n - j)) == Rat(counts[j]));
        // invariance <w_1 b, c> = <b, w_1 c>
        for (int k = 1; k <= d.l(); ++k)
            for (int bb = 0; bb < d.dim(); ++bb)
                for (int cc = 0; cc < d.dim(); ++cc) {
                    Rat lhs(0), rhs(0);
                    for (int e = 0; e < d.dim(); ++e) {
                        lhs += d.prod[d.w(k)][bb][e] * d.gram(e, cc);
                        rhs += d.prod[d.w(k)][cc][e] * d.gram(bb, e);
                    }
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("eigenvalues") {
    auto t3 = derive_griess_table(find_case("3A"));
    auto e3 = omega_tilde_eigenvalues(t3);
    CHECK(e3[0][0] == Rat(2, 3));
    CHECK(e3[1][0] == Rat(4, 3));
    auto e6 = omega_tilde_eigenvalues(builtin_table(find_case("6A")));
    CHECK(e6[2][2] == Rat(3, 2));
    CHECK(e6[0][2] == Rat(0));
    for (const auto& cs : all_cases()) {
        auto ev = omega_tilde_eigenvalues(builtin_table(cs));
        for (int j = 0; j < cs.n - 1; ++j) {
            Rat s(0);
            for (const auto& row : ev) s += row[j];
            CHECK(s == Rat(2));
        }
    }
}
