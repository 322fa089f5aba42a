#pragma once

#include "griesslab/builtin.hpp"
#include "griesslab/poly.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace griesslab {

using cplx = std::complex<double>;

bool verify_exact(const PolySystem& sys, const std::vector<Cyc>& candidate);

enum class SolutionStatus { ExactVerified, NumericalIsolated, NumericalPositiveDimensional };
std::string to_string(SolutionStatus s);

struct SolutionRecord {
    std::vector<cplx> values;
    std::optional<std::vector<Cyc>> exact;
    SolutionStatus status = SolutionStatus::NumericalIsolated;
    double residual = 0;   // max |f_i| / (1 + |x|^2)
    double condition = 0;  // of the Jacobian at the endpoint
    cplx central_charge;
    std::optional<Cyc> exact_central_charge;
    std::optional<int> matched;  // index into the candidate list
    int multiplicity = 1;        // number of paths ending here
    bool is_zero() const;
};

enum class PathStatus { Finite, Diverged, Failed };

struct PathResult {
    PathStatus status = PathStatus::Failed;
    std::vector<cplx> endpoint;
    int steps = 0;
    double t = 0;  // homotopy time reached
};

struct SolveOptions {
    double dedup_tol = 1e-8;
    double condition_threshold = 1e10;
    double divergence_bound = 1e8;
    int max_retries = 3;
    int parallel = 1;
};

struct FamilyReport {
    std::string name;
    int endpoints = 0;        // numerical endpoints lying on the family
    bool formula_verified = false;
    std::vector<std::string> details;
};

struct SolutionSet {
    std::uint64_t seed = 0;
    long bezout = 0;
    int attempts = 0;
    int failed_paths = 0;
    int diverged_paths = 0;
    cplx gamma;
    std::vector<PathResult> paths;
    std::vector<SolutionRecord> records;  // distinct finite endpoints, sorted
    double min_separation = 0;            // between distinct isolated endpoints
    std::vector<FamilyReport> families;
};

// Total-degree homotopy from x_i^2 = r_i. Endpoints matching a candidate within
// dedup_tol are upgraded to exact records when the candidate verifies exactly.
SolutionSet enumerate(const PolySystem& sys, std::uint64_t seed, const SolveOptions& opts = {},
                      const std::vector<PrintedSolution>& candidates = {});

// Positive-dimensional components among the endpoints. For the 4A system the
// one-parameter family is also checked by exact substitution at d = 1/100, 1/30, 1/16.
std::vector<FamilyReport> detect_families(const PolySystem& sys, const std::string& case_label,
                                          const std::vector<SolutionRecord>& records);

struct Histogram {
    std::map<Rat, int> rational;
    int irrational = 0;
};
// Nontrivial isolated endpoints by central charge.
Histogram histogram(const SolutionSet& s);

}  // namespace griesslab
