#pragma once

#include "griesslab/qseries.hpp"

#include <string>
#include <vector>

namespace griesslab {

// 1 / prod_{n>=1} (1 - q^n) to order T
RatSeries euler_inverse(const Rat& order);
// prod_{n>=1} (1 - q^n)
RatSeries euler_product(const Rat& order);

// theta_{n,m}(tau, z) = sum_{j in n/2m + Z} e^{2 pi i m z j} q^{m j^2}
CycSeries theta_rank1(long m, long n, const Rat& z, const Rat& order);

// tr_{L(l,0)} sigma(-z gamma/2) q^{L(0)} by the q-integer quotient formula,
// with a = e^{pi i z}
CycSeries affine_twisted_trace(int level, const Rat& z, const Rat& order);

// ch V_{(k/2l) gamma + Z gamma}, <gamma, gamma> = 2l, 0 <= k <= 2l-1
RatSeries lattice_coset_char(int level, int k, const Rat& order);

// ch W_l(0, 2k), 0 <= k <= l-1. Throws std::runtime_error if the Fourier
// average does not collapse to nonnegative integers.
RatSeries parafermion_char(int level, int k, const Rat& order);

struct ModuleLabel {
    int m = 1;  // c = 1 - 6/((m+2)(m+3))
    int r = 1;  // 1 <= r <= m+1
    int s = 1;  // 1 <= s <= m+2
    Rat central_charge() const;
    Rat weight() const;
};
// c_m for the unitary series
Rat unitary_central_charge(int m);
// m with c_m = c; throws std::invalid_argument
int unitary_index(const Rat& c);
// a label of weight h in the m grid; throws std::invalid_argument
ModuleLabel label_for_weight(int m, const Rat& h);
// distinct weights of the m grid, sorted
std::vector<Rat> virasoro_weights(int m);

RatSeries virasoro_char(const ModuleLabel& label, const Rat& order);
RatSeries virasoro_char(int m, const Rat& h, const Rat& order);

// Tuples drawn from the grids whose sum is an integer, in lexicographic order.
std::vector<std::vector<Rat>> integral_weight_modules(const std::vector<std::vector<Rat>>& grids);

// Lowest weights of the six irreducible modules of the 3A coset algebra
// (L(4/5,0)+L(4/5,3)) x (L(6/7,0)+L(6/7,5)) + 2 L(4/5,2/3) x L(6/7,4/3).
std::vector<Rat> u3a_module_weights();

struct CharIdentityReport {
    std::string case_label;
    std::string kind;  // "independent" or "consistency"
    std::string lhs, rhs;
    Rat order;
    bool equal = false;
    std::optional<Rat> mismatch;
    Rat lhs_coeff, rhs_coeff;
};
// Cases 2A, 3A, 4B, 3C, 5A, 6A, 2B. Throws std::invalid_argument otherwise.
CharIdentityReport verify_decomposition(const std::string& case_label, const Rat& order);
std::vector<std::string> decomposition_cases();

// Expansions printed in the text: coefficients of q^{lead + i}.
struct PrintedExpansion {
    int level;
    int k;  // W_level(0, 2k)
    Rat lead;
    std::vector<long> coeffs;
};
const std::vector<PrintedExpansion>& printed_parafermion_expansions();

// dim of the weight-n space of L(1/2, h1) x L(21/22, h2)
struct PrintedDimension {
    Rat h1, h2;
    long n;
    long dim;
};
const std::vector<PrintedDimension>& printed_dimensions();

}  // namespace griesslab
