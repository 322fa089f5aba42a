#pragma once

#include "griesslab/e8.hpp"
#include "griesslab/linalg.hpp"

#include <string>
#include <vector>

namespace griesslab {

// Structure constants and form of B = span{w~1..w~l, X^1..X^{n-1}}.
// Index layout: 0..l-1 are the omega-tilde, l..l+n-2 are X^1..X^{n-1}.
struct GriessTable {
    const CaseDescriptor* cs = nullptr;
    std::vector<std::string> labels;
    // prod[a][b][d] = coefficient of basis d in basis_a o basis_b
    std::vector<std::vector<std::vector<Rat>>> prod;
    Matrix<Rat> gram;

    int dim() const { return static_cast<int>(labels.size()); }
    int l() const { return static_cast<int>(cs->comps.size()); }
    int n() const { return cs->n; }
    int w(int k) const { return k - 1; }       // index of w~k, k = 1..l
    int x(int j) const { return l() + j - 1; } // index of X^j, j = 1..n-1

    friend bool operator==(const GriessTable& a, const GriessTable& b) {
        return a.cs == b.cs && a.labels == b.labels && a.prod == b.prod && a.gram == b.gram;
    }
};

GriessTable empty_table(const CaseDescriptor& cs);

}  // namespace griesslab
