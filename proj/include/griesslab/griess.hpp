#pragma once

#include "griesslab/cyc.hpp"
#include "griesslab/griess_table.hpp"
#include "griesslab/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace griesslab {

// Element of B, coefficients in the table's basis order.
struct GriessElement {
    std::vector<Cyc> c;

    GriessElement() = default;
    explicit GriessElement(std::vector<Cyc> coeffs) : c(std::move(coeffs)) {}
    static GriessElement zero(const GriessTable& t) { return GriessElement(std::vector<Cyc>(t.dim(), Cyc(0))); }
    static GriessElement basis(const GriessTable& t, int idx);
    // e.g. {{"w1", 1/2}, {"X2", 1/20}}
    static GriessElement from_labels(const GriessTable& t, const std::vector<std::pair<std::string, Cyc>>& terms);

    GriessElement& operator+=(const GriessElement& o);
    GriessElement& operator-=(const GriessElement& o);
    GriessElement& operator*=(const Cyc& s);
    friend GriessElement operator+(GriessElement a, const GriessElement& b) { return a += b; }
    friend GriessElement operator-(GriessElement a, const GriessElement& b) { return a -= b; }
    friend GriessElement operator*(const Cyc& s, GriessElement a) { return a *= s; }
    friend bool operator==(const GriessElement&, const GriessElement&) = default;

    bool is_zero() const;
    std::string str(const GriessTable& t) const;
};

GriessElement mul(const GriessElement& x, const GriessElement& y, const GriessTable& t);
Cyc form(const GriessElement& x, const GriessElement& y, const GriessTable& t);
GriessElement conformal_residual(const GriessElement& w, const GriessTable& t);
Cyc central_charge(const GriessElement& w, const GriessTable& t);

GriessElement ehat(const GriessTable& t);
GriessElement fhat(const GriessTable& t);
GriessElement sigma_action(const GriessElement& x, const GriessTable& t, int power = 1);
GriessElement theta_action(const GriessElement& x, const GriessTable& t);

Rat mckay_value(const GriessTable& t);

Matrix<Cyc> gram_matrix(const std::vector<GriessElement>& vs, const GriessTable& t);

struct PermutationGroup {
    long order = 0;
    std::vector<std::vector<int>> generators;  // images of 0..n-1
};
// All index permutations preserving g, by exhaustive search (size <= 8).
PermutationGroup gram_stabilizer(const Matrix<Cyc>& g);

// dimension of the smallest product-closed subspace containing the seeds
int generation_span(const std::vector<GriessElement>& seeds, const GriessTable& t);

// lambda with w o v = lambda v, or nullopt
std::optional<Cyc> eigen_check(const GriessElement& w, const GriessElement& v, const GriessTable& t);

struct DecompositionReport {
    bool ok = true;
    std::vector<Cyc> central_charges;
    std::vector<std::string> failures;
};
DecompositionReport orthogonal_decomposition_check(const std::vector<GriessElement>& vs, const GriessTable& t);

// multiplicative order of sigma^2 on B
int tau_product_order(const GriessTable& t);

// w o w - 2w = 0 in coordinates, each equation scaled to primitive integer form,
// and the central-charge form 2<w,w>.
PolySystem polynomial_system(const GriessTable& t);

// Differences between a derived system and printed equation strings, compared as
// sets of primitive polynomials. Empty if they agree.
std::vector<std::string> compare_systems(const PolySystem& derived, const std::vector<std::string>& printed,
                                         const std::string& printed_cc);

}  // namespace griesslab
