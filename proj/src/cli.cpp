#include "griesslab/report.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace griesslab {

namespace {

int to_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) throw std::invalid_argument(std::string(what) + " must be an integer, got '" + s + "'");
    return v;
}

Report char_report(const RunConfig& cfg) {
    const auto& a = cfg.args;
    if (a.empty()) throw std::invalid_argument("char: expected 'vir M R S' or 'para LEVEL K'");
    if (a[0] == "vir" && a.size() == 4)
        return vir_char_report(to_int(a[1], "m"), to_int(a[2], "r"), to_int(a[3], "s"), cfg.order);
    if (a[0] == "para" && a.size() == 3) return para_char_report(to_int(a[1], "level"), to_int(a[2], "k"), cfg.order);
    throw std::invalid_argument("char: expected 'vir M R S' or 'para LEVEL K'");
}

Report dispatch(const RunConfig& cfg) {
    const std::string& op = cfg.op;
    auto case_arg = [&]() -> const std::string& {
        if (cfg.args.size() != 1) throw std::invalid_argument(op + ": expected one case label (0-8 or 1A..3C)");
        return cfg.args[0];
    };
    if (op == "table") return table_report(case_arg(), cfg.derive);
    if (op == "mckay") return mckay_report();
    if (op == "solve") return solve_report(case_arg(), cfg.seed, cfg.parallel);
    if (op == "check-solutions") return check_solutions_report(case_arg());
    if (op == "char") return char_report(cfg);
    if (op == "verify") return verify_report(case_arg(), cfg.order);
    if (op == "stabilizer") return stabilizer_report(case_arg());
    if (op == "generation") return generation_report(case_arg());
    if (op == "all") return acceptance_report(cfg);
    throw std::invalid_argument("unknown subcommand " + op);
}

void diagnose(std::ostream& err, OutputFormat f, const std::string& kind, const std::string& msg,
              const std::vector<std::string>& details = {}) {
    if (f == OutputFormat::Json) {
        json j = {{"error", kind}, {"message", msg}};
        if (!details.empty()) j["details"] = details;
        err << j.dump() << "\n";
        return;
    }
    err << "griess-lab: " << kind << ": " << msg << "\n";
    for (const auto& d : details) err << "  " << d << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Griess algebras of the coset VOAs attached to the extended E8 diagram", "griess-lab"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text", order = "24", corpus;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--corpus", corpus, "Golden corpus directory (default $GRIESS_LAB_CORPUS or corpus/)");
    app.add_flag("--golden", cfg.golden, "Compare the report with its corpus entry");
    app.add_flag("--update-golden", cfg.update_golden, "Write the report as its corpus entry");

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"table", "Griess algebra table of a case"},
        {"mckay", "<e^, f^> for the nine nodes"},
        {"solve", "All conformal vectors of a case by homotopy continuation"},
        {"check-solutions", "Exact check of the printed conformal vectors of a case"},
        {"char", "Character: 'vir M R S' or 'para LEVEL K' (W_LEVEL(0,2K))"},
        {"verify", "Character identity for the decomposition of a case"},
        {"stabilizer", "Permutations preserving the Gram matrix of the sigma^j e^ set"},
        {"generation", "Dimension of the subalgebra generated by e^ and f^"},
        {"all", "Run every acceptance criterion"},
    };
    std::map<std::string, CLI::App*> sc;
    for (const auto& s : subs) {
        auto* c = app.add_subcommand(s.name, s.help);
        sc[s.name] = c;
        if (std::string(s.name) != "mckay" && std::string(s.name) != "all")
            c->add_option("args", cfg.args, "Case label (0-8 or 1A..3C) or character label")->required();
    }
    auto* derive = sc["table"]->add_flag("--derive", "Derive from the E8 lattice (default)");
    auto* builtin = sc["table"]->add_flag("--builtin", "Use the built-in table");
    derive->excludes(builtin);
    for (const char* s : {"solve", "all"}) {
        sc[s]->add_option("--seed", cfg.seed, "Random seed");
        sc[s]->add_option("--paths-parallel", cfg.parallel, "Worker threads for path tracking")->check(CLI::PositiveNumber);
    }
    for (const char* s : {"char", "verify"}) sc[s]->add_option("--order", order, "Truncation order (rational)");
    sc["all"]->add_option("--criterion", cfg.criterion, "Run a single criterion")->check(CLI::Range(1, criterion_count()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    cfg.corpus = corpus.empty() ? default_corpus() : std::filesystem::path(corpus);
    cfg.derive = !*builtin;
    for (const auto& [name, c] : sc)
        if (c->parsed()) cfg.op = name;

    Report r;
    try {
        cfg.order = Rat::parse(order);
        if (cfg.order.sign() <= 0) throw std::invalid_argument("--order must be positive");
        r = dispatch(cfg);
    } catch (const std::invalid_argument& e) {
        diagnose(err, cfg.format, "usage", e.what());
        return 2;
    } catch (const std::exception& e) {
        diagnose(err, cfg.format, "failure", e.what());
        return 1;
    }

    emit(r, cfg.format, out);
    int status = r.ok ? 0 : 1;
    if (!r.ok) diagnose(err, cfg.format, "check failed", r.entry);
    if (cfg.update_golden) {
        golden_write(r, cfg.corpus);
        err << "wrote " << (cfg.corpus / (r.entry + ".json")).string() << "\n";
    } else if (cfg.golden) {
        auto d = golden_compare(r, cfg.corpus);
        if (d.status == GoldenDiff::Status::Missing) {
            diagnose(err, cfg.format, "golden missing", "no corpus entry " + d.entry, d.diffs);
            status = 1;
        } else if (d.status == GoldenDiff::Status::Mismatch) {
            diagnose(err, cfg.format, "golden mismatch", "corpus entry " + d.entry + " differs", d.diffs);
            status = 1;
        }
    }
    return status;
}

}  // namespace griesslab
