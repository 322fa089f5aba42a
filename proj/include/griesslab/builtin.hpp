#pragma once

#include "griesslab/cyc.hpp"
#include "griesslab/griess_table.hpp"

#include <string>
#include <vector>

namespace griesslab {

// Structure constants and Gram matrices as printed.
GriessTable builtin_table(const CaseDescriptor& cs);

// Printed central charges of w~1..w~l.
std::vector<Rat> builtin_central_charges(const CaseDescriptor& cs);

// Printed polynomial systems, as printed (variables a, b, c, ...).
// Empty for 1A and 2B, which have no printed system.
std::vector<std::string> printed_system(const CaseDescriptor& cs);
std::string printed_central_charge_form(const CaseDescriptor& cs);

struct PrintedSolution {
    std::vector<Cyc> values;
    Rat central_charge;
    std::string family;  // e.g. "c.c. 1/2, j=2"
};
// Every tuple of the printed solution lists, with all j and sign choices expanded.
// The 4A one-parameter family is not included here.
std::vector<PrintedSolution> printed_solutions(const CaseDescriptor& cs);

// Printed conformal vectors forming an orthogonal decomposition of the
// Virasoro element, with highest-weight vectors and their eigenvalue tuples.
struct HighestWeight {
    std::string name;
    std::vector<Cyc> v;
    std::vector<Rat> weights;  // one per conformal vector
};
struct DecompositionLemma {
    std::string name;
    std::vector<std::vector<Cyc>> vs;
    std::vector<Rat> central_charges;
    std::vector<HighestWeight> hw;
};
std::vector<DecompositionLemma> decomposition_lemmas(const CaseDescriptor& cs);

// McKay values <e^, f^> for nodes 0..8.
const std::vector<Rat>& printed_mckay_values();

}  // namespace griesslab
