#include "hypercode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypercode/compare.hpp"
#include "hypercode/error.hpp"
#include "hypercode/homology.hpp"
#include "hypercode/io.hpp"
#include "hypercode/synth.hpp"
#include "hypercode/topology.hpp"

namespace hypercode::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int dim_cap_from_env() {
    const char* raw = std::getenv("HYPERCODE_DIM_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultDimCap;
    try {
        std::size_t used = 0;
        int cap = std::stoi(raw, &used);
        if (used != std::string(raw).size() || cap < 1) throw std::invalid_argument("cap");
        return cap;
    } catch (const std::logic_error&) {
        throw UsageError(std::string("HYPERCODE_DIM_CAP must be a positive integer, got '") + raw + "'");
    }
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
    if (path.empty() || path == "-") out << contents;
    else io::write_file(path, contents);
}

Hyperstructure load_hyperstructure(const std::string& path) {
    return io::hyperstructure_from_json(io::parse_json(io::read_file(path)));
}

struct IngestArgs {
    std::string input;
    std::string format = "matrix";
    bool header = false;
    double dt = 0.0;
    std::size_t n = 0;
    bool n_given = false;
    std::string output;
};

struct BuildArgs {
    std::string input;
    BuildConfig config;
    std::string decomposition = "exact-cover";
    std::string output;
};

struct BettiArgs {
    std::string input;
    int level = 1;
};

struct NerveArgs {
    std::string input;
    std::string rule = "pairwise";
    std::vector<int> levels;
    std::vector<std::string> depths;
    std::int64_t clique_budget = 1'000'000;
    bool betti = false;
    std::vector<int> gluing;
    std::string output;
};

struct PersistArgs {
    std::string input;
    int level = 0;
    bool keep_zero = false;
    std::string maps;
    std::string output;
};

struct CompareArgs {
    std::string a;
    std::string b;
    bool with_nerve = false;
    std::string format = "json";
    std::string output;
};

struct SynthArgs {
    std::string input;
    std::int64_t seed = -1;
    std::string output;
};

void do_ingest(const IngestArgs& a, std::ostream& out) {
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw Error("cannot open '" + a.input + "' for reading");
    OccurrenceLog log;
    if (a.format == "matrix") {
        log = parse_spike_matrix(in, a.header);
    } else {
        if (!(a.dt > 0.0)) throw UsageError("--dt is required and must be positive for --format events");
        auto events = parse_event_csv(in, a.header);
        std::size_t n = a.n;
        if (!a.n_given) {
            n = 0;
            for (const auto& e : events) n = std::max<std::size_t>(n, std::size_t{e.neuron} + 1);
        }
        log = bin_event_list(events, a.dt, n);
    }
    emit(a.output, io::dump(io::to_json(log)), out);
}

void do_build(BuildArgs a, std::ostream& out) {
    a.config.decomposition = decomposition_from_string(a.decomposition);
    auto log = io::log_from_json(io::parse_json(io::read_file(a.input)));
    emit(a.output, io::dump(io::to_json(build_hyperstructure(log, a.config))), out);
}

void do_betti(const BettiArgs& a, int dim_cap, std::ostream& out) {
    auto h = load_hyperstructure(a.input);
    out << join(betti_numbers(level_complex(h, a.level), dim_cap)) << "\n";
}

void do_nerve(const NerveArgs& a, int dim_cap, std::ostream& out) {
    auto h = load_hyperstructure(a.input);
    if (!a.gluing.empty()) {
        if (a.gluing.size() != 2) throw UsageError("--gluing takes exactly two values: LEVEL TARGET");
        emit(a.output, to_dot(gluing_graph(h, a.gluing[0], a.gluing[1])), out);
        return;
    }
    NerveConfig cfg;
    cfg.rule = nerve_rule_from_string(a.rule);
    cfg.include_levels.insert(a.levels.begin(), a.levels.end());
    cfg.clique_budget = a.clique_budget;
    for (const auto& d : a.depths) {
        auto colon = d.find(':');
        if (colon == std::string::npos) throw UsageError("--depth expects LEVEL:TARGET, got '" + d + "'");
        try {
            cfg.include_j[std::stoi(d.substr(0, colon))].insert(std::stoi(d.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw UsageError("--depth expects LEVEL:TARGET, got '" + d + "'");
        }
    }
    auto k = nerve(h, cfg);
    if (a.betti) emit(a.output, join(betti_numbers(k, dim_cap)) + "\n", out);
    else emit(a.output, io::dump(io::to_json(k)), out);
}

void do_persist(const PersistArgs& a, int dim_cap, std::ostream& out) {
    auto h = load_hyperstructure(a.input);
    std::vector<LevelBarcode> bars;
    if (a.level > 0) bars.push_back(LevelBarcode{a.level, persistence(frequency_filtration(h, a.level, dim_cap), a.keep_zero)});
    else bars = barcode_sequence(h, dim_cap, a.keep_zero);
    emit(a.output, io::barcode_csv(bars), out);
    if (!a.maps.empty()) {
        io::Json maps = io::Json::array();
        for (int i = 1; i + 1 <= h.depth(); ++i) maps.push_back(io::to_json(delta_correspondence(h, i)));
        io::write_file(a.maps, io::dump(maps));
    }
}

void do_compare(const CompareArgs& a, int dim_cap, std::ostream& out) {
    auto report = compare_levels(load_hyperstructure(a.a), load_hyperstructure(a.b), CompareOptions{a.with_nerve, dim_cap});
    if (a.format == "table") emit(a.output, render_table(report), out);
    else emit(a.output, io::dump(io::to_json(report)), out);
}

void do_synth(const SynthArgs& a, std::ostream& out) {
    auto spec = io::synth_spec_from_json(io::parse_json(io::read_file(a.input)));
    if (a.seed >= 0) spec.seed = static_cast<std::uint64_t>(a.seed);
    emit(a.output, render_matrix(synth_generate(spec)), out);
}

std::string version_text() {
    std::ostringstream s;
    s << "hypercode " << kVersion << "\n"
      << "schemas: " << io::kLogSchema << " " << io::kHyperstructureSchema << " " << io::kComplexSchema << " "
      << io::kBarcodeSchema << " " << io::kReportSchema << " " << io::kSynthSchema << "\n"
      << "rng: std::mt19937_64, uniform = (draw >> 11) * 2^-53\n";
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Neural-code hyperstructures: levels, nerves, Betti numbers and barcodes", "hypercode"};
    app.require_subcommand(0, 1);
    bool show_version = false;
    app.add_flag("--version", show_version, "Print version and file schema versions");

    IngestArgs ingest;
    auto* c_ingest = app.add_subcommand("ingest", "Spike matrix or event CSV to an occurrence log");
    c_ingest->add_option("input", ingest.input, "Input CSV")->required();
    c_ingest->add_option("--format", ingest.format, "matrix (rows=neurons) or events (neuron_id,timestamp)")
        ->check(CLI::IsMember({"matrix", "events"}));
    c_ingest->add_flag("--header", ingest.header, "Skip the first line");
    c_ingest->add_option("--dt", ingest.dt, "Bin width in seconds (events)");
    auto* n_opt = c_ingest->add_option("--n", ingest.n, "Neuron count (events; default max id + 1)");
    c_ingest->add_option("-o,--output", ingest.output, "Output log JSON (default stdout)");

    BuildArgs build;
    auto* c_build = app.add_subcommand("build", "Occurrence log to hyperstructure");
    c_build->add_option("input", build.input, "Log JSON")->required();
    c_build->add_option("--max-level", build.config.max_level, "Highest level to detect")->check(CLI::PositiveNumber);
    c_build->add_option("--decomposition", build.decomposition, "exact-cover or subset-realization")
        ->check(CLI::IsMember({"exact-cover", "subset-realization", "subset"}));
    c_build->add_option("--min-count", build.config.min_count, "Drop bonds seen fewer times")->check(CLI::PositiveNumber);
    c_build->add_flag("--two-pass", build.config.two_pass, "Collect level-1 patterns before higher levels");
    c_build->add_flag("--keep-union-words", build.config.keep_union_words,
                      "Also record decomposed active sets as level-1 patterns");
    c_build->add_option("--cover-budget", build.config.cover_budget, "Exact-cover search node budget per bin")
        ->check(CLI::PositiveNumber);
    c_build->add_option("-o,--output", build.output, "Output hyperstructure JSON (default stdout)");

    BettiArgs betti_args;
    auto* c_betti = app.add_subcommand("betti", "Betti numbers of a level complex");
    c_betti->add_option("input", betti_args.input, "Hyperstructure JSON")->required();
    c_betti->add_option("--level", betti_args.level, "Level i of Delta(C_i)");

    NerveArgs nerve_args;
    auto* c_nerve = app.add_subcommand("nerve", "Nerve complex of a hyperstructure");
    c_nerve->add_option("input", nerve_args.input, "Hyperstructure JSON")->required();
    c_nerve->add_option("--rule", nerve_args.rule, "pairwise or connected")
        ->check(CLI::IsMember({"pairwise", "connected"}));
    c_nerve->add_option("--levels", nerve_args.levels, "Levels to include (default all)")->delimiter(',');
    c_nerve->add_option("--depth", nerve_args.depths, "Restrict level I to gluing depths J, as I:J (repeatable)");
    c_nerve->add_option("--clique-budget", nerve_args.clique_budget, "Maximal clique budget")
        ->check(CLI::PositiveNumber);
    c_nerve->add_flag("--betti", nerve_args.betti, "Print Betti numbers instead of the complex");
    c_nerve->add_option("--gluing", nerve_args.gluing, "Export gluing graph LEVEL,TARGET as DOT")->delimiter(',');
    c_nerve->add_option("-o,--output", nerve_args.output, "Output file (default stdout)");

    PersistArgs persist;
    auto* c_persist = app.add_subcommand("persist", "Frequency-filtration barcodes");
    c_persist->add_option("input", persist.input, "Hyperstructure JSON")->required();
    c_persist->add_option("--level", persist.level, "Single level (default all)")->check(CLI::PositiveNumber);
    c_persist->add_flag("--keep-zero", persist.keep_zero, "Keep zero-length bars");
    c_persist->add_option("--maps", persist.maps, "Also write level correspondences as JSON");
    c_persist->add_option("-o,--output", persist.output, "Output barcode CSV (default stdout)");

    CompareArgs compare;
    auto* c_compare = app.add_subcommand("compare", "Levelwise comparison of two hyperstructures");
    c_compare->add_option("a", compare.a, "First hyperstructure JSON")->required();
    c_compare->add_option("b", compare.b, "Second hyperstructure JSON")->required();
    c_compare->add_flag("--with-nerve", compare.with_nerve, "Include nerve Betti numbers");
    c_compare->add_option("--format", compare.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    c_compare->add_option("-o,--output", compare.output, "Output file (default stdout)");

    SynthArgs synth;
    auto* c_synth = app.add_subcommand("synth", "Generate a spike matrix from a planted-pattern spec");
    c_synth->add_option("input", synth.input, "Synth spec JSON")->required();
    c_synth->add_option("--seed", synth.seed, "Override the spec seed")->check(CLI::NonNegativeNumber);
    c_synth->add_option("-o,--output", synth.output, "Output matrix CSV (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    if (show_version) {
        out << version_text();
        return 0;
    }

    try {
        const int dim_cap = dim_cap_from_env();
        ingest.n_given = n_opt->count() > 0;
        if (c_ingest->parsed()) do_ingest(ingest, out);
        else if (c_build->parsed()) do_build(build, out);
        else if (c_betti->parsed()) do_betti(betti_args, dim_cap, out);
        else if (c_nerve->parsed()) do_nerve(nerve_args, dim_cap, out);
        else if (c_persist->parsed()) do_persist(persist, dim_cap, out);
        else if (c_compare->parsed()) do_compare(compare, dim_cap, out);
        else if (c_synth->parsed()) do_synth(synth, out);
        else {
            err << app.help();
            return 2;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace hypercode::cli
