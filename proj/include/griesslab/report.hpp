#pragma once

#include "griesslab/rat.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace griesslab {

using json = nlohmann::json;

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
    std::string op;
    std::vector<std::string> args;  // positional arguments after the subcommand
    std::uint64_t seed = 0;
    Rat order = Rat(24);
    int parallel = 1;
    OutputFormat format = OutputFormat::Text;
    std::filesystem::path corpus;
    bool derive = true;  // table: derive from the lattice, or use the built-in table
    bool golden = false;
    bool update_golden = false;
    int criterion = 0;  // all: 0 runs every criterion
};

// Default corpus directory: $GRIESS_LAB_CORPUS, else the checked-in corpus/.
std::filesystem::path default_corpus();

struct Report {
    std::string entry;  // corpus key, e.g. "table/6A"
    json data;
    std::vector<std::string> text;
    bool ok = true;
};

// Sorted keys, two-space indent, trailing newline.
std::string canonical_json(const json& j);
std::vector<std::string> csv_rows(const json& j);
void emit(const Report& r, OutputFormat f, std::ostream& out);

// Throws std::invalid_argument for unknown cases or malformed arguments.
Report table_report(const std::string& case_key, bool derive);
Report mckay_report();
Report solve_report(const std::string& case_key, std::uint64_t seed, int parallel);
Report check_solutions_report(const std::string& case_key);
Report vir_char_report(int m, int r, int s, const Rat& order);
Report para_char_report(int level, int k, const Rat& order);
Report verify_report(const std::string& case_key, const Rat& order);
Report stabilizer_report(const std::string& case_key);
Report generation_report(const std::string& case_key);

struct GoldenDiff {
    enum class Status { Match, Missing, Mismatch };
    Status status = Status::Match;
    std::string entry;
    std::vector<std::string> diffs;  // JSON paths of differing values
};
std::string to_string(GoldenDiff::Status s);

// Byte-exact against corpus/<entry>.json. Floating-point values (solver
// endpoints) that differ in bytes are compared with a 1e-8 tolerance.
GoldenDiff golden_compare(const Report& r, const std::filesystem::path& corpus);
void golden_write(const Report& r, const std::filesystem::path& corpus);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> notes;
};
int criterion_count();
CriterionResult run_criterion(int id, const RunConfig& cfg);
Report acceptance_report(const RunConfig& cfg);

// Command-line entry point. Exit status 0 pass, 1 failed check, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace griesslab
