#include "griesslab/builtin.hpp"

#include <stdexcept>

namespace griesslab {

namespace {

struct Term {
    const char* label;
    long num;
    long den = 1;
};

class TableBuilder {
public:
    explicit TableBuilder(const CaseDescriptor& cs) : t_(empty_table(cs)) {}

    int index(const std::string& lab) const {
        for (int i = 0; i < t_.dim(); ++i)
            if (t_.labels[i] == lab) return i;
        throw std::logic_error("builtin: unknown basis label " + lab);
    }
    void prod(const std::string& a, const std::string& b, std::initializer_list<Term> terms) {
        int i = index(a), j = index(b);
        std::vector<Rat> v(t_.dim(), Rat(0));
        for (const auto& tm : terms) v[index(tm.label)] = Rat(tm.num, tm.den);
        t_.prod[i][j] = v;
        t_.prod[j][i] = v;
    }
    void gram(const std::string& a, const std::string& b, Rat v) {
        int i = index(a), j = index(b);
        t_.gram(i, j) = v;
        t_.gram(j, i) = v;
    }
    // common part: w~k w~j = 2 delta w~k, <w~k,w~k> = c/2, eigenvalues
    void common(const std::vector<Rat>& cc, const std::vector<std::vector<Rat>>& eig) {
        int l = t_.l();
        for (int k = 1; k <= l; ++k) {
            std::string wk = "w" + std::to_string(k);
            prod(wk, wk, {});
            t_.prod[t_.w(k)][t_.w(k)][t_.w(k)] = Rat(2);
            gram(wk, wk, cc[k - 1] / Rat(2));
            for (int j = 1; j < t_.n(); ++j) {
                std::vector<Rat> v(t_.dim(), Rat(0));
                v[t_.x(j)] = eig[k - 1][j - 1];
                t_.prod[t_.w(k)][t_.x(j)] = v;
                t_.prod[t_.x(j)][t_.w(k)] = v;
            }
        }
    }
    GriessTable take() { return t_; }

private:
    GriessTable t_;
};

Rat R(long a, long b = 1) { return Rat(a, b); }

}  // namespace

std::vector<Rat> builtin_central_charges(const CaseDescriptor& cs) {
    switch (cs.node) {
    case 0: return {R(1, 2)};
    case 1: return {R(1, 2), R(7, 10)};
    case 2: return {R(4, 5), R(6, 7)};
    case 3: return {R(1), R(1)};
    case 4: return {R(8, 7), R(8, 7)};
    case 5: return {R(4, 5), R(1, 2), R(5, 4)};
    case 6: return {R(1, 2), R(7, 5)};
    case 7: return {R(1)};
    case 8: return {R(16, 11)};
    }
    throw std::logic_error("builtin_central_charges: bad node");
}

GriessTable builtin_table(const CaseDescriptor& cs) {
    TableBuilder b(cs);
    auto cc = builtin_central_charges(cs);
    switch (cs.node) {
    case 0:
        b.common(cc, {{}});
        break;
    case 1:
        b.common(cc, {{R(1, 2)}, {R(3, 2)}});
        b.prod("X1", "X1", {{"w1", 224}, {"w2", 480}});
        b.gram("X1", "X1", R(112));
        break;
    case 2:
        b.common(cc, {{R(2, 3), R(2, 3)}, {R(4, 3), R(4, 3)}});
        b.prod("X1", "X1", {{"X2", 20}});
        b.prod("X2", "X2", {{"X1", 20}});
        b.prod("X1", "X2", {{"w1", 135}, {"w2", 252}});
        b.gram("X1", "X2", R(81));
        break;
    case 3:
        b.common(cc, {{R(3, 4), R(1), R(3, 4)}, {R(5, 4), R(1), R(5, 4)}});
        b.prod("X1", "X1", {{"X2", 16}});
        b.prod("X1", "X2", {{"X3", 15}});
        b.prod("X1", "X3", {{"w1", 96}, {"w2", 160}});
        b.prod("X2", "X2", {{"w1", 120}, {"w2", 120}});
        b.prod("X2", "X3", {{"X1", 15}});
        b.prod("X3", "X3", {{"X2", 16}});
        b.gram("X1", "X3", R(64));
        b.gram("X2", "X2", R(60));
        break;
    case 4:
        b.common(cc, {{R(4, 5), R(6, 5), R(6, 5), R(4, 5)}, {R(6, 5), R(4, 5), R(4, 5), R(6, 5)}});
        b.prod("X1", "X1", {{"X2", 12}});
        b.prod("X1", "X2", {{"X3", 12}});
        b.prod("X1", "X3", {{"X4", 12}});
        b.prod("X1", "X4", {{"w1", 70}, {"w2", 105}});
        b.prod("X2", "X2", {{"X4", 12}});
        b.prod("X2", "X3", {{"w1", 105}, {"w2", 70}});
        b.prod("X2", "X4", {{"X1", 12}});
        b.prod("X3", "X3", {{"X1", 12}});
        b.prod("X3", "X4", {{"X2", 12}});
        b.prod("X4", "X4", {{"X3", 12}});
        b.gram("X1", "X4", R(50));
        b.gram("X2", "X3", R(50));
        break;
    case 5:
        b.common(cc, {{R(2, 3), R(2, 3), R(0), R(2, 3), R(2, 3)},
                      {R(1, 2), R(0), R(1, 2), R(0), R(1, 2)},
                      {R(5, 6), R(4, 3), R(3, 2), R(4, 3), R(5, 6)}});
        b.prod("X1", "X1", {{"X2", 8}});
        b.prod("X1", "X2", {{"X3", 9}});
        b.prod("X1", "X3", {{"X4", 8}});
        b.prod("X1", "X4", {{"X5", 10}});
        b.prod("X1", "X5", {{"w1", 60}, {"w2", 72}, {"w3", 48}});
        b.prod("X2", "X2", {{"X4", 12}});
        b.prod("X2", "X3", {{"X5", 10}});
        b.prod("X2", "X4", {{"w1", 75}, {"w3", 96}});
        b.prod("X2", "X5", {{"X1", 10}});
        b.prod("X3", "X3", {{"w2", 80}, {"w3", 96}});
        b.prod("X3", "X4", {{"X1", 10}});
        b.prod("X3", "X5", {{"X2", 8}});
        b.prod("X4", "X4", {{"X2", 12}});
        b.prod("X4", "X5", {{"X3", 9}});
        b.prod("X5", "X5", {{"X4", 8}});
        b.gram("X1", "X5", R(36));
        b.gram("X2", "X4", R(45));
        b.gram("X3", "X3", R(40));
        break;
    case 6:
        b.common(cc, {{R(1, 2), R(0), R(1, 2)}, {R(3, 2), R(2), R(3, 2)}});
        b.prod("X1", "X1", {{"X2", 12}});
        b.prod("X1", "X2", {{"X3", 15}});
        b.prod("X1", "X3", {{"w1", 112}, {"w2", 120}});
        b.prod("X2", "X2", {{"w2", 200}});
        b.prod("X2", "X3", {{"X1", 15}});
        b.prod("X3", "X3", {{"X2", 12}});
        b.gram("X1", "X3", R(56));
        b.gram("X2", "X2", R(70));
        break;
    case 7:
        b.common(cc, {{R(2)}});
        b.prod("X1", "X1", {{"w1", 512}});
        b.gram("X1", "X1", R(128));
        break;
    case 8:
        b.common(cc, {{R(2), R(2)}});
        b.prod("X1", "X1", {{"X2", 20}});
        b.prod("X2", "X2", {{"X1", 20}});
        b.prod("X1", "X2", {{"w1", 231}});
        b.gram("X1", "X2", R(84));
        break;
    default:
        throw std::logic_error("builtin_table: bad node");
    }
    return b.take();
}

std::vector<std::string> printed_system(const CaseDescriptor& cs) {
    switch (cs.node) {
    case 1: return {"a^2+112c^2-a", "b^2+240c^2-b", "ac+3bc-2c"};
    case 2: return {"a^2+135cd-a", "b^2+252cd-b", "15d^2+2ac+4bc-3c", "15c^2+2ad+4bd-3d"};
    case 3:
        return {"a^2+60d^2+96ce-a", "b^2+60d^2+160ce-b", "3ac+5bc+60de-4c", "8c^2+8e^2+ad+bd-d",
                "3ae+5be+60cd-4e"};
    case 4:
        return {"a^2+70cf+105de-a",         "b^2+105cf+70de-b",         "4ac+6bc+30e^2+60df-5c",
                "6ad+4bd+30c^2+60ef-5d",    "6ae+4be+30f^2+60cd-5e",    "4af+6bf+30d^2+60ce-5f"};
    case 5:
        return {"a^2+60dh+75eg-a",
                "b^2+40f^2+72dh-b",
                "c^2+48f^2+48dh+96eg-c",
                "4ad+3bd+5cd+60eh+60fg-6d",
                "12d^2+18g^2+2ae+4ce+24fh-3e",
                "bf+3cf+18de+18gh-2f",
                "18e^2+12h^2+2ag+4cg+24df-3g",
                "4ah+3bh+5ch+60dg+60ef-6h"};
    case 6:
        return {"a^2+112ce-a", "b^2+100d^2+120ce-b", "ac+3bc+30de-2c", "6c^2+6e^2+2bd-d", "ae+3be+30cd-2e"};
    case 8: return {"a^2+924bc-a", "2ab+10c^2-b", "2ac+10b^2-c"};
    default: return {};
    }
}

std::string printed_central_charge_form(const CaseDescriptor& cs) {
    switch (cs.node) {
    case 1: return "1/2a^2+7/10b^2+224c^2";
    case 2: return "4/5a^2+6/7b^2+324cd";
    case 3: return "a^2+b^2+256ce+120d^2";
    case 4: return "8/7a^2+8/7b^2+200cf+200de";
    case 5: return "4/5a^2+1/2b^2+5/4c^2+80f^2+144dh+180eg";
    case 6: return "1/2a^2+7/5b^2+224ce+140d^2";
    case 8: return "16/11a^2+336bc";
    default: return "";
    }
}

const std::vector<Rat>& printed_mckay_values() {
    static const std::vector<Rat> v = {R(1, 4),   R(1, 32), R(13, 1024), R(1, 128), R(3, 512),
                                       R(5, 1024), R(1, 256), R(0),       R(1, 256)};
    return v;
}

}  // namespace griesslab

namespace griesslab {

namespace {

Cyc z(int n, long k) { return Cyc::root_of_unity(n, k); }
Cyc q(long a, long b = 1) { return Cyc(Rat(a, b)); }

using Vec = std::vector<Cyc>;

struct SolutionList {
    std::vector<PrintedSolution> out;
    void add(Vec v, Rat cc, std::string fam) { out.push_back({std::move(v), cc, std::move(fam)}); }
    // j = 0..count-1
    template <class F>
    void orbit(int count, Rat cc, const std::string& fam, F f) {
        for (int j = 0; j < count; ++j) add(f(j), cc, fam + ", j=" + std::to_string(j));
    }
};

}  // namespace

std::vector<PrintedSolution> printed_solutions(const CaseDescriptor& cs) {
    SolutionList s;
    switch (cs.node) {
    case 0: s.add({q(1)}, R(1, 2), "c.c. 1/2"); break;
    case 1:
        s.add({q(1), q(0), q(0)}, R(1, 2), "c.c. 1/2");
        s.add({q(1, 8), q(5, 8), q(1, 32)}, R(1, 2), "c.c. 1/2, +");
        s.add({q(1, 8), q(5, 8), q(-1, 32)}, R(1, 2), "c.c. 1/2, -");
        s.add({q(0), q(1), q(0)}, R(7, 10), "c.c. 7/10");
        s.add({q(7, 8), q(3, 8), q(1, 32)}, R(7, 10), "c.c. 7/10, +");
        s.add({q(7, 8), q(3, 8), q(-1, 32)}, R(7, 10), "c.c. 7/10, -");
        s.add({q(1), q(1), q(0)}, R(6, 5), "c.c. 6/5");
        break;
    case 2:
        s.orbit(3, R(1, 2), "c.c. 1/2",
                [](int j) { return Vec{q(5, 32), q(7, 16), q(1, 32) * z(3, j), q(1, 32) * z(3, 2 * j)}; });
        s.add({q(1), q(0), q(0), q(0)}, R(4, 5), "c.c. 4/5");
        s.orbit(3, R(4, 5), "c.c. 4/5",
                [](int j) { return Vec{q(1, 16), q(7, 8), q(-1, 48) * z(3, j), q(-1, 48) * z(3, 2 * j)}; });
        s.add({q(0), q(1), q(0), q(0)}, R(6, 7), "c.c. 6/7");
        s.orbit(3, R(6, 7), "c.c. 6/7",
                [](int j) { return Vec{q(15, 16), q(1, 8), q(1, 48) * z(3, j), q(1, 48) * z(3, 2 * j)}; });
        s.orbit(3, R(81, 70), "c.c. 81/70",
                [](int j) { return Vec{q(27, 32), q(9, 16), q(-1, 32) * z(3, j), q(-1, 32) * z(3, 2 * j)}; });
        s.add({q(1), q(1), q(0), q(0)}, R(58, 35), "c.c. 58/35");
        break;
    case 3:
        s.orbit(4, R(1, 2), "c.c. 1/2", [](int j) {
            return Vec{q(3, 16), q(5, 16), q(1, 32) * z(4, j), q(1, 32) * z(4, 2 * j), q(1, 32) * z(4, 3 * j)};
        });
        s.add({q(1), q(0), q(0), q(0), q(0)}, R(1), "c.c. 1");
        s.add({q(0), q(1), q(0), q(0), q(0)}, R(1), "c.c. 1");
        s.orbit(4, R(3, 2), "c.c. 3/2", [](int j) {
            return Vec{q(13, 16), q(11, 16), q(1, 32) * z(4, j), q(-1, 32) * z(4, 2 * j), q(1, 32) * z(4, 3 * j)};
        });
        s.orbit(4, R(6, 7), "c.c. 6/7", [](int j) {
            return Vec{q(1, 7), q(5, 7), q(1, 28) * z(8, 2 * j + 1), q(0), q(1, 28) * z(8, -(2 * j + 1))};
        });
        s.orbit(4, R(8, 7), "c.c. 8/7", [](int j) {
            return Vec{q(6, 7), q(2, 7), q(1, 28) * z(8, 2 * j + 1), q(0), q(1, 28) * z(8, -(2 * j + 1))};
        });
        s.add({q(1), q(1), q(0), q(0), q(0)}, R(2), "c.c. 2");
        break;
    case 4: {
        // no complete list is printed; these are the vectors named in the text
        s.add({q(1), q(0), q(0), q(0), q(0), q(0)}, R(8, 7), "w~1");
        s.add({q(0), q(1), q(0), q(0), q(0), q(0)}, R(8, 7), "w~2");
        s.add({q(1), q(1), q(0), q(0), q(0), q(0)}, R(16, 7), "Virasoro element");
        s.orbit(5, R(1, 2), "sigma^j e^", [](int j) {
            Vec v{q(7, 32), q(7, 32)};
            for (int k = 1; k <= 4; ++k) v.push_back(q(1, 32) * z(5, j * k));
            return v;
        });
        const long vx[4] = {-3, 1, 1, -3}, wx[4] = {1, -3, -3, 1};
        s.orbit(5, R(25, 28), "sigma^j v", [&](int j) {
            Vec v{q(15, 64), q(35, 64)};
            for (int k = 1; k <= 4; ++k) v.push_back(q(vx[k - 1], 64) * z(5, j * k));
            return v;
        });
        s.orbit(5, R(25, 28), "sigma^j w", [&](int j) {
            Vec v{q(35, 64), q(15, 64)};
            for (int k = 1; k <= 4; ++k) v.push_back(q(wx[k - 1], 64) * z(5, j * k));
            return v;
        });
        break;
    }
    case 5: {
        auto e = [](std::initializer_list<Cyc> l) { return Vec(l); };
        s.add(e({q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0)}), R(4, 5), "w~1");
        s.add(e({q(0), q(1), q(0), q(0), q(0), q(0), q(0), q(0)}), R(1, 2), "w~2");
        s.add(e({q(0), q(0), q(1), q(0), q(0), q(0), q(0), q(0)}), R(5, 4), "w~3");
        s.orbit(6, R(1, 2), "sigma^j e^", [](int j) {
            Vec v{q(5, 32), q(1, 8), q(1, 4)};
            for (int k = 1; k <= 5; ++k) v.push_back(q(1, 32) * z(6, j * k));
            return v;
        });
        s.add(e({q(0), q(2, 7), q(4, 7), q(0), q(0), q(1, 14), q(0), q(0)}), R(6, 7), "w~(E6)");
        s.add(e({q(0), q(2, 7), q(4, 7), q(0), q(0), q(-1, 14), q(0), q(0)}), R(6, 7), "sigma w~(E6)");
        s.add(e({q(0), q(5, 7), q(3, 7), q(0), q(0), q(-1, 14), q(0), q(0)}), R(25, 28), "w~2+w~3-w~(E6)");
        s.add(e({q(0), q(5, 7), q(3, 7), q(0), q(0), q(1, 14), q(0), q(0)}), R(25, 28),
              "sigma(w~2+w~3-w~(E6))");
        s.add(e({q(1), q(1), q(1), q(0), q(0), q(0), q(0), q(0)}), R(51, 20), "Virasoro element");
        break;
    }
    case 6:
        s.add({q(1), q(0), q(0), q(0), q(0)}, R(1, 2), "c.c. 1/2");
        s.orbit(4, R(1, 2), "c.c. 1/2", [](int j) {
            return Vec{q(1, 8), q(5, 16), q(1, 32) * z(4, j), q(1, 32) * z(4, 2 * j), q(1, 32) * z(4, 3 * j)};
        });
        s.add({q(0), q(1, 2), q(0), q(1, 20), q(0)}, R(7, 10), "c.c. 7/10, +");
        s.add({q(0), q(1, 2), q(0), q(-1, 20), q(0)}, R(7, 10), "c.c. 7/10, -");
        s.orbit(4, R(7, 10), "c.c. 7/10", [](int j) {
            return Vec{q(7, 8), q(3, 16), q(1, 32) * z(4, j), q(3, 160) * z(4, 2 * j), q(1, 32) * z(4, 3 * j)};
        });
        s.orbit(4, R(21, 22), "c.c. 21/22", [](int j) {
            return Vec{q(7, 11), q(5, 11), q(1, 22) * z(8, 2 * j + 1), q(0), q(1, 22) * z(8, -(2 * j + 1))};
        });
        s.orbit(4, R(52, 55), "c.c. 52/55", [](int j) {
            return Vec{q(4, 11), q(6, 11), q(1, 22) * z(8, 2 * j + 1), q(0), q(1, 22) * z(8, -(2 * j + 1))};
        });
        s.add({q(1), q(1, 2), q(0), q(1, 20), q(0)}, R(6, 5), "c.c. 6/5, +");
        s.add({q(1), q(1, 2), q(0), q(-1, 20), q(0)}, R(6, 5), "c.c. 6/5, -");
        s.orbit(4, R(6, 5), "c.c. 6/5", [](int j) {
            return Vec{q(1, 8), q(13, 16), q(1, 32) * z(4, j), q(-3, 160) * z(4, 2 * j), q(1, 32) * z(4, 3 * j)};
        });
        s.add({q(0), q(1), q(0), q(0), q(0)}, R(7, 5), "c.c. 7/5");
        s.orbit(4, R(7, 5), "c.c. 7/5", [](int j) {
            return Vec{q(7, 8), q(11, 16), q(1, 32) * z(4, j), q(-1, 32) * z(4, 2 * j), q(1, 32) * z(4, 3 * j)};
        });
        s.add({q(1), q(1), q(0), q(0), q(0)}, R(19, 10), "c.c. 19/10");
        break;
    case 7:
        s.add({q(1, 2), q(1, 32)}, R(1, 2), "c.c. 1/2, +");
        s.add({q(1, 2), q(-1, 32)}, R(1, 2), "c.c. 1/2, -");
        break;
    case 8:
        s.orbit(3, R(1, 2), "c.c. 1/2", [](int j) { return Vec{q(11, 32), q(1, 32) * z(3, j), q(1, 32) * z(3, 2 * j)}; });
        s.orbit(3, R(21, 22), "c.c. 21/22",
                [](int j) { return Vec{q(21, 32), q(-1, 32) * z(3, j), q(-1, 32) * z(3, 2 * j)}; });
        s.add({q(1), q(0), q(0)}, R(16, 11), "c.c. 16/11");
        break;
    }
    return s.out;
}

std::vector<DecompositionLemma> decomposition_lemmas(const CaseDescriptor& cs) {
    std::vector<DecompositionLemma> out;
    switch (cs.node) {
    case 2: {
        out.push_back({"w~1, w~2",
                       {{q(1), q(0), q(0), q(0)}, {q(0), q(1), q(0), q(0)}},
                       {R(4, 5), R(6, 7)},
                       {{"X1", {q(0), q(0), q(1), q(0)}, {R(2, 3), R(4, 3)}},
                        {"X2", {q(0), q(0), q(0), q(1)}, {R(2, 3), R(4, 3)}}}});
        out.push_back({"x0, y0",
                       {{q(1, 16), q(7, 8), q(-1, 48), q(-1, 48)}, {q(15, 16), q(1, 8), q(1, 48), q(1, 48)}},
                       {R(4, 5), R(6, 7)},
                       {{"u", {q(135), q(-126), q(-13), q(-13)}, {R(2, 3), R(4, 3)}},
                        {"v", {q(0), q(0), q(1), q(-1)}, {R(13, 8), R(3, 8)}}}});
        break;
    }
    case 4: {
        Vec u{q(7, 32), q(7, 32), q(1, 32), q(1, 32), q(1, 32), q(1, 32)};
        Vec v{q(15, 64), q(35, 64), q(-3, 64), q(1, 64), q(1, 64), q(-3, 64)};
        Vec w{q(35, 64), q(15, 64), q(1, 64), q(-3, 64), q(-3, 64), q(1, 64)};
        out.push_back({"u, v, w",
                       {u, v, w},
                       {R(1, 2), R(25, 28), R(25, 28)},
                       {{"a", {q(1), q(-1), q(-1, 35), q(1, 35), q(1, 35), q(-1, 35)}, {R(1, 2), R(3, 4), R(3, 4)}},
                        {"b1", {q(0), q(0), q(3), q(2), q(-2), q(-3)}, {R(1, 16), R(5, 32), R(57, 32)}},
                        {"b2", {q(0), q(0), q(2), q(-3), q(3), q(-2)}, {R(1, 16), R(57, 32), R(5, 32)}}}});
        break;
    }
    case 5: {
        Vec w1{q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0)};
        Vec e6{q(0), q(2, 7), q(4, 7), q(0), q(0), q(1, 14), q(0), q(0)};
        Vec w3{q(0), q(5, 7), q(3, 7), q(0), q(0), q(-1, 14), q(0), q(0)};
        out.push_back({"w~1, w~(E6), w~2+w~3-w~(E6)", {w1, e6, w3}, {R(4, 5), R(6, 7), R(25, 28)}, {}});
        break;
    }
    case 6: {
        Vec w1{q(1), q(0), q(0), q(0), q(0)};
        Vec w2{q(0), q(1, 2), q(0), q(1, 20), q(0)};
        Vec w3{q(0), q(1, 2), q(0), q(-1, 20), q(0)};
        out.push_back({"w1, w2, w3",
                       {w1, w2, w3},
                       {R(1, 2), R(7, 10), R(7, 10)},
                       {{"u", {q(0), q(0), q(1), q(0), q(1)}, {R(1, 2), R(3, 2), R(0)}},
                        {"v", {q(0), q(0), q(1), q(0), q(-1)}, {R(1, 2), R(0), R(3, 2)}}}});
        break;
    }
    case 8: {
        out.push_back({"x, y",
                       {{q(11, 32), q(1, 32), q(1, 32)}, {q(21, 32), q(-1, 32), q(-1, 32)}},
                       {R(1, 2), R(21, 22)},
                       {{"v", {q(0), q(1), q(-1)}, {R(1, 16), R(31, 16)}}}});
        break;
    }
    default: break;
    }
    return out;
}

}  // namespace griesslab
