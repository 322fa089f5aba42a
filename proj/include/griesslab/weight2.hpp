#pragma once

#include "griesslab/e8.hpp"
#include "griesslab/griess_table.hpp"

#include <map>
#include <vector>

namespace griesslab {

// Weight-2 element of V_{sqrt2 E8}:
//   sum quad[u][v] alpha_u(-1) alpha_v(-1) 1      (quad symmetric)
// + (sqrt2 lin)(-2) 1
// + sum expo[v] e^{sqrt2 v}                        (v a root of E8)
struct Weight2Element {
    std::array<std::array<Rat, 8>, 8> quad{};
    LatticeVec lin{};
    std::map<RootVec, Rat> expo;

    Weight2Element& operator+=(const Weight2Element& o);
    Weight2Element& operator-=(const Weight2Element& o);
    Weight2Element& operator*=(const Rat& s);
    friend Weight2Element operator+(Weight2Element a, const Weight2Element& b) { return a += b; }
    friend Weight2Element operator-(Weight2Element a, const Weight2Element& b) { return a -= b; }
    friend Weight2Element operator*(const Rat& s, Weight2Element a) { return a *= s; }
    friend bool operator==(const Weight2Element& a, const Weight2Element& b);

    bool lin_is_zero() const;
    void prune();
};

// alpha(-1)^2 1 for a vector alpha
Weight2Element heis_square(const RootVec& v);
Weight2Element exp_elem(const RootVec& v);

// degree-one product a_1 b and the invariant form
Weight2Element griess_product(const Weight2Element& a, const Weight2Element& b);
Rat griess_form(const Weight2Element& a, const Weight2Element& b);

struct BasisElements {
    std::vector<Weight2Element> omega_tilde;  // w~k
    std::vector<Weight2Element> s;            // s^k
    std::vector<Weight2Element> omega;        // omega(Phi_k)
    std::vector<Weight2Element> x;            // X^1..X^{n-1}
};
BasisElements build_basis_elements(const CaseDescriptor& cs);

// Coordinates of e in span(basis); throws std::runtime_error if e is not in the span.
std::vector<Rat> express_in_span(const Weight2Element& e, const std::vector<Weight2Element>& basis);

GriessTable derive_griess_table(const CaseDescriptor& cs);

// (w~k)_1 X^j = lambda X^j; entry [k-1][j-1]
std::vector<std::vector<Rat>> omega_tilde_eigenvalues(const GriessTable& t);

}  // namespace griesslab
