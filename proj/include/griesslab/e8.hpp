#pragma once

#include "griesslab/rat.hpp"

#include <array>
#include <string>
#include <vector>

namespace griesslab {

// Integral vector of E8 in simple-root coordinates (alpha_1..alpha_8).
using RootVec = std::array<int, 8>;
// Rational vector of E8 (x) Q in the same coordinates.
using LatticeVec = std::array<Rat, 8>;

// Gram matrix of alpha_1..alpha_8.
const std::array<std::array<int, 8>, 8>& e8_gram();
int pair(const RootVec& u, const RootVec& v);
Rat pair(const LatticeVec& u, const LatticeVec& v);
LatticeVec to_rational(const RootVec& v);

// The 240 roots, sorted lexicographically.
const std::vector<RootVec>& e8_roots();
// index of a root in e8_roots(), or -1
int root_index(const RootVec& v);

struct ExtendedDiagram {
    std::array<RootVec, 9> alpha;             // alpha_0..alpha_8
    std::array<std::array<int, 9>, 9> gram;   // <alpha_i, alpha_j>
};
const ExtendedDiagram& extended_diagram();

// coefficients of alpha_0..alpha_8 in the null relation
inline constexpr std::array<int, 9> kMarks = {1, 2, 3, 4, 5, 6, 4, 2, 3};

struct Component {
    std::string type;        // "A4", "E7", ...
    std::vector<int> nodes;  // extended-diagram nodes
    int rank = 0;
    int coxeter = 0;         // #roots / rank
    Rat central_charge;      // of omega-tilde, 2 rank / (h + 2)
    std::vector<RootVec> roots;
};

struct CaseDescriptor {
    int node = 0;
    std::string label;  // McKay label, e.g. "5A"
    int n = 1;          // index of L(i) in E8
    int conductor = 1;  // cyclotomic field used for this case
    std::vector<Component> comps;
    LatticeVec a;       // coset-pairing vector
    int dim() const { return static_cast<int>(comps.size()) + n - 1; }
};

const std::vector<CaseDescriptor>& all_cases();
// Accepts "5A" style labels or node indices "0".."8". Throws std::invalid_argument.
const CaseDescriptor& find_case(const std::string& key);
const CaseDescriptor& case_by_node(int node);

// j with v in j alpha_i + L(i). Throws std::domain_error if v is not in E8.
int coset_of(const LatticeVec& v, const CaseDescriptor& cs);
int coset_of(const RootVec& v, const CaseDescriptor& cs);
// Same via the pairing with a: j = -n <a, v> mod n.
int coset_by_pairing(const RootVec& v, const CaseDescriptor& cs);

// counts[j] = number of roots in coset j; counts[0] = roots of L(i)
std::vector<int> coset_root_counts(const CaseDescriptor& cs);
std::vector<RootVec> coset_roots(const CaseDescriptor& cs, int j);

}  // namespace griesslab
