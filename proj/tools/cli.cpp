#include "pm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pm/agnostic.hpp"
#include "pm/aware.hpp"
#include "pm/classification.hpp"
#include "pm/errors.hpp"
#include "pm/experiments.hpp"
#include "pm/io.hpp"
#include "pm/random_models.hpp"

namespace pm {

namespace {

constexpr const char* kDefaultMeasures = "ri,ari,pc_mn,ami,ri_g,ari_g,pc_mn_g";

int env_threads() {
    const char* raw = std::getenv("PM_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0)
        throw std::invalid_argument("PM_THREADS must be a non-negative integer");
    return static_cast<int>(value);
}

std::string format_value(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

Graph load_graph(const std::string& path, bool one_based) {
    try {
        return parse_edge_list(read_text_file(path), one_based);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

Partition load_partition(const std::string& path, int vertex_count, bool one_based) {
    try {
        return parse_partition(read_text_file(path), vertex_count, one_based);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_text_file(path, content);
}

// Ground truth used by the generators and experiment commands: `parts`
// equal contiguous blocks of `part_size` vertices.
Partition block_partition(int parts, int part_size) {
    if (parts < 1 || part_size < 1)
        throw std::invalid_argument("parts and part size must be positive");
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(parts) * part_size);
    for (int p = 0; p < parts; ++p)
        for (int i = 0; i < part_size; ++i) labels.push_back(p);
    return Partition(std::move(labels));
}

std::vector<std::string> split_csv_strings(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
        out.push_back(token);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    for (const std::string& token : split_csv_strings(csv)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed number '" + token + "'");
        }
    }
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    for (const std::string& token : split_csv_strings(csv)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer '" + token + "'");
        }
    }
    return out;
}

// Applies a centered moving average to the mean column of each measure's
// points (in x order); window 1 is the identity.
std::vector<CurvePoint> smooth_curves(std::vector<CurvePoint> points, int window) {
    if (window == 1) return points;
    std::map<std::string, std::vector<std::size_t>> by_measure;
    for (std::size_t i = 0; i < points.size(); ++i)
        by_measure[points[i].measure].push_back(i);
    for (auto& [name, idx] : by_measure) {
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
        std::vector<double> means;
        means.reserve(idx.size());
        for (std::size_t i : idx) means.push_back(points[i].mean);
        const std::vector<double> smoothed = moving_average(means, window);
        for (std::size_t j = 0; j < idx.size(); ++j) points[idx[j]].mean = smoothed[j];
    }
    return points;
}

void emit_curve_outputs(const std::vector<CurvePoint>& points, const std::string& csv_path,
                        const std::string& svg_path, const SvgOptions& svg_options) {
    write_output(csv_path, emit_curve_csv(points));
    if (!svg_path.empty()) write_text_file(svg_path, emit_curve_svg(points, svg_options));
}

// ---------------------------------------------------------------- compare

struct CompareOpts {
    std::string graph, a, b;
    std::string measures = "";
    bool one_based = false;
    bool json = false;
};

int run_compare(const CompareOpts& o) {
    const Graph g = load_graph(o.graph, o.one_based);
    const Partition a = load_partition(o.a, g.vertex_count(), o.one_based);
    const Partition b = load_partition(o.b, g.vertex_count(), o.one_based);
    const std::vector<MeasureSelector> measures =
        o.measures.empty() ? MeasureSelector::all() : MeasureSelector::parse_list(o.measures);

    bool any_degenerate = false;
    nlohmann::ordered_json out;
    std::string text;
    for (const MeasureSelector& sel : measures) {
        try {
            const double value = evaluate_measure(sel, g, a, b);
            out[sel.id()] = value;
            text += sel.id() + " " + format_value(value) + "\n";
        } catch (const DegenerateMeasure&) {
            any_degenerate = true;
            out[sel.id()] = nullptr;
            text += sel.id() + " degenerate\n";
        }
    }
    if (o.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text;
    if (any_degenerate) {
        std::cerr << "degenerate measure: at least one requested measure is undefined "
                     "on these inputs\n";
        return 3;
    }
    return 0;
}

// -------------------------------------------------------------- represent

struct RepresentOpts {
    std::string graph;
    std::string bits;
    bool one_based = false;
};

int run_represent(const RepresentOpts& o) {
    const Graph g = load_graph(o.graph, o.one_based);
    if (o.bits.size() != g.edge_count())
        throw ParseError(0, "classification has " + std::to_string(o.bits.size()) +
                                " bits, graph has " + std::to_string(g.edge_count()) +
                                " edges");
    std::vector<std::uint8_t> bits(o.bits.size());
    for (std::size_t i = 0; i < o.bits.size(); ++i) {
        if (o.bits[i] != '0' && o.bits[i] != '1')
            throw ParseError(0, "classification must be a string of 0s and 1s");
        bits[i] = o.bits[i] == '1' ? 1 : 0;
    }
    const EdgeClassification b{std::move(bits)};
    const EdgeClassification rep = class_representative(g, b);
    const Partition induced = induced_partition(g, b);

    std::string rep_text(rep.size(), '0');
    for (std::size_t i = 0; i < rep.size(); ++i)
        if (rep.test(i)) rep_text[i] = '1';
    std::cout << "representative " << rep_text << "\n" << write_partition(induced);
    return 0;
}

// -------------------------------------------------------------------- gen

struct GenPlantedOpts {
    int n = 0, parts = 0;
    std::string truth_file;
    double p = -1.0, q = -1.0;
    std::int64_t k1 = -1, k2 = -1;
    std::uint64_t seed = 0;
    std::string out, truth_out;
    bool one_based = false;
};

int run_gen_planted(const GenPlantedOpts& o) {
    Partition truth;
    if (!o.truth_file.empty()) {
        if (o.n > 0 || o.parts > 0)
            throw std::invalid_argument("--truth excludes --n and --parts");
        // Vertex count comes from the file itself: find the largest vertex.
        const std::string text = read_text_file(o.truth_file);
        int max_vertex = -1;
        std::stringstream stream(text);
        std::string line;
        while (std::getline(stream, line)) {
            std::stringstream row(line);
            std::string tok;
            if (!(row >> tok) || tok[0] == '#') continue;
            max_vertex = std::max(max_vertex, std::stoi(tok) - (o.one_based ? 1 : 0));
        }
        truth = parse_partition(text, max_vertex + 1, o.one_based);
    } else {
        if (o.n <= 0 || o.parts <= 0)
            throw std::invalid_argument("either --truth or both --n and --parts are required");
        if (o.n % o.parts != 0)
            throw std::invalid_argument("--n must be divisible by --parts");
        truth = block_partition(o.parts, o.n / o.parts);
    }

    const bool densities = o.p >= 0.0 || o.q >= 0.0;
    const bool counts = o.k1 >= 0 || o.k2 >= 0;
    if (densities == counts)
        throw std::invalid_argument("specify either --p and --q or --k1 and --k2");
    PlantedSpec spec;
    if (densities) {
        if (o.p < 0.0 || o.q < 0.0) throw std::invalid_argument("both --p and --q are required");
        spec = PlantedSpec::from_densities(truth, o.p, o.q);
    } else {
        if (o.k1 < 0 || o.k2 < 0) throw std::invalid_argument("both --k1 and --k2 are required");
        spec.truth = truth;
        spec.intra_edges = o.k1;
        spec.inter_edges = o.k2;
        spec.validate();
    }
    const Graph g = planted_partition_graph(spec, Seed(o.seed));
    write_output(o.out, write_edge_list(g));
    if (!o.truth_out.empty()) write_text_file(o.truth_out, write_partition(truth));
    return 0;
}

struct GenSimpleGraphOpts {
    int n = 0;
    std::int64_t m = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen_er(const GenSimpleGraphOpts& o) {
    write_output(o.out, write_edge_list(erdos_renyi_graph(o.n, o.m, Seed(o.seed))));
    return 0;
}

int run_gen_tree(const GenSimpleGraphOpts& o) {
    write_output(o.out, write_edge_list(random_tree(o.n, Seed(o.seed))));
    return 0;
}

struct GenPartitionOpts {
    std::string graph;
    std::int64_t k = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool one_based = false;
};

int run_gen_process1(const GenPartitionOpts& o) {
    const Graph g = load_graph(o.graph, o.one_based);
    const Partition p = random_partition_process1(g, static_cast<int>(o.k), Seed(o.seed));
    write_output(o.out, write_partition(p));
    return 0;
}

int run_gen_process2(const GenPartitionOpts& o) {
    const Graph g = load_graph(o.graph, o.one_based);
    const Partition p = random_partition_process2(g, o.k, Seed(o.seed));
    write_output(o.out, write_partition(p));
    return 0;
}

// --------------------------------------------------------------- baseline

struct BaselineOpts {
    std::string mode;
    std::string graph, truth;
    std::string k_list;
    std::string measures = kDefaultMeasures;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    int smooth = 1;
    std::string out, svg;
    bool one_based = false;
};

int run_baseline(const BaselineOpts& o) {
    const Graph g = load_graph(o.graph, o.one_based);
    const Partition truth = load_partition(o.truth, g.vertex_count(), o.one_based);
    const std::vector<MeasureSelector> measures = MeasureSelector::parse_list(o.measures);
    SweepOptions opt;
    opt.trials = o.trials;
    opt.seed = Seed(o.seed);
    opt.threads = env_threads();

    std::vector<CurvePoint> points;
    SvgOptions svg_options;
    svg_options.y_label = "mean similarity";
    if (o.mode == "sizes") {
        std::vector<int> ks;
        for (std::int64_t k : parse_int_list(o.k_list)) ks.push_back(static_cast<int>(k));
        points = baseline_size_sweep(g, truth, ks, measures, opt);
        svg_options.title = "baseline vs. random connected partitions";
        svg_options.x_label = "part count";
    } else if (o.mode == "edges") {
        points = baseline_edge_sweep(g, truth, parse_int_list(o.k_list), measures, opt);
        svg_options.title = "baseline vs. random edge-induced partitions";
        svg_options.x_label = "selected edges";
    } else {
        throw std::invalid_argument("--mode must be 'sizes' or 'edges'");
    }
    emit_curve_outputs(smooth_curves(std::move(points), o.smooth), o.out, o.svg, svg_options);
    return 0;
}

// -------------------------------------------------------- structure-sweep

struct StructureOpts {
    int parts = 0, part_size = 0;
    double p = 0.9;
    std::string q_list;
    std::string measures = "ari,ami,ari_g";
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    int smooth = 1;
    std::string out, svg;
};

int run_structure(const StructureOpts& o) {
    StructureSweepConfig config;
    config.truth = block_partition(o.parts, o.part_size);
    config.intra_density = o.p;
    config.inter_densities = parse_double_list(o.q_list);
    SweepOptions opt;
    opt.trials = o.trials;
    opt.seed = Seed(o.seed);
    opt.threads = env_threads();
    const auto points =
        structure_sweep(config, MeasureSelector::parse_list(o.measures), opt);
    SvgOptions svg_options;
    svg_options.title = "similarity to the planted truth vs. structure strength";
    svg_options.x_label = "q / p";
    svg_options.y_label = "mean similarity";
    emit_curve_outputs(smooth_curves(points, o.smooth), o.out, o.svg, svg_options);
    return 0;
}

// ------------------------------------------------- lemma-check / theorem-check

struct CheckOpts {
    int parts = 0, part_size = 0;
    double p = 0.9, q = 0.1;
    int coarse = 1, fine = 2;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string out;
};

ComparisonSpec make_comparison_spec(const CheckOpts& o) {
    ComparisonSpec spec;
    spec.truth = block_partition(o.parts, o.part_size);
    spec.intra_density = o.p;
    spec.inter_density = o.q;
    spec.coarse_parts = o.coarse;
    spec.fine_parts = o.fine;
    return spec;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int run_lemma_check(const CheckOpts& o) {
    SweepOptions opt;
    opt.trials = o.trials;
    opt.seed = Seed(o.seed);
    opt.threads = env_threads();
    const LemmaReport report = lemma_check(make_comparison_spec(o), opt);

    const auto side_line = [](const char* name, const SideCheck& s) {
        std::ostringstream line;
        line << name << ": applicable=" << yes_no(s.applicable)
             << " mc_mean=" << format_value(s.mc_mean) << " se=" << format_value(s.std_error)
             << " reference=" << format_value(s.reference) << " trials=" << s.trials
             << " degenerate=" << s.degenerate << " pass=" << yes_no(s.pass);
        return line.str();
    };
    std::cout << side_line("coarse side", report.coarse_side) << "\n"
              << side_line("fine side", report.fine_side) << "\n"
              << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";

    if (!o.out.empty()) {
        std::string csv = "side,applicable,mc_mean,mc_std,std_error,reference,trials,"
                          "degenerate,pass\n";
        const auto row = [](const char* name, const SideCheck& s) {
            std::string r = name;
            r += "," + std::to_string(s.applicable ? 1 : 0);
            r += "," + format_value(s.mc_mean);
            r += "," + format_value(s.mc_std);
            r += "," + format_value(s.std_error);
            r += "," + format_value(s.reference);
            r += "," + std::to_string(s.trials);
            r += "," + std::to_string(s.degenerate);
            r += "," + std::to_string(s.pass ? 1 : 0);
            return r + "\n";
        };
        csv += row("coarse", report.coarse_side);
        csv += row("fine", report.fine_side);
        write_text_file(o.out, csv);
    }
    return report.passed() ? 0 : 4;
}

int run_theorem_check(const CheckOpts& o) {
    SweepOptions opt;
    opt.trials = o.trials;
    opt.seed = Seed(o.seed);
    opt.threads = env_threads();
    const TheoremReport report = theorem_check(make_comparison_spec(o), opt);

    std::cout << "pairs: truth=" << report.truth_pairs << " coarse=" << report.coarse_pairs
              << " fine=" << report.fine_pairs << "\n"
              << "density bound: p=" << format_value(report.intra_density) << " > "
              << format_value(report.density_bound) << "\n"
              << "agnostic: coarse=" << format_value(report.agnostic_coarse)
              << " fine=" << format_value(report.agnostic_fine)
              << " coarse<fine=" << yes_no(report.agnostic_ordering) << "\n"
              << "aware: coarse_mean=" << format_value(report.mc_coarse_mean)
              << " fine_mean=" << format_value(report.mc_fine_mean)
              << " diff=" << format_value(report.diff_mean)
              << " se=" << format_value(report.diff_std_error) << " trials=" << report.trials
              << " degenerate=" << report.degenerate
              << " coarse>fine=" << yes_no(report.aware_ordering) << "\n"
              << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";

    if (!o.out.empty()) {
        std::string csv = "field,value\n";
        const auto kv = [&csv](const std::string& key, const std::string& value) {
            csv += key + "," + value + "\n";
        };
        kv("truth_pairs", std::to_string(report.truth_pairs));
        kv("coarse_pairs", std::to_string(report.coarse_pairs));
        kv("fine_pairs", std::to_string(report.fine_pairs));
        kv("intra_density", format_value(report.intra_density));
        kv("inter_density", format_value(report.inter_density));
        kv("density_bound", format_value(report.density_bound));
        kv("agnostic_coarse", format_value(report.agnostic_coarse));
        kv("agnostic_fine", format_value(report.agnostic_fine));
        kv("agnostic_ordering", std::to_string(report.agnostic_ordering ? 1 : 0));
        kv("mc_coarse_mean", format_value(report.mc_coarse_mean));
        kv("mc_fine_mean", format_value(report.mc_fine_mean));
        kv("diff_mean", format_value(report.diff_mean));
        kv("diff_std_error", format_value(report.diff_std_error));
        kv("trials", std::to_string(report.trials));
        kv("degenerate", std::to_string(report.degenerate));
        kv("aware_ordering", std::to_string(report.aware_ordering ? 1 : 0));
        write_text_file(o.out, csv);
    }
    return report.passed() ? 0 : 4;
}

// ------------------------------------------------------------- resolution

struct ResolutionOpts {
    int parts = 0, part_size = 0;
    double p = 0.9;
    std::string q_list;
    int finer = 0, coarser = 0;
    std::string measures = "ari,ami,ari_g";
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string out, svg;
};

int run_resolution(const ResolutionOpts& o) {
    ResolutionConfig config;
    config.truth = block_partition(o.parts, o.part_size);
    config.intra_density = o.p;
    config.inter_densities = parse_double_list(o.q_list);
    config.fine_parts = o.finer;
    config.coarse_parts = o.coarser;
    SweepOptions opt;
    opt.trials = o.trials;
    opt.seed = Seed(o.seed);
    opt.threads = env_threads();
    const ResolutionReport report =
        resolution_experiment(config, MeasureSelector::parse_list(o.measures), opt);

    for (const ResolutionPoint& pt : report.points)
        std::cout << "q=" << format_value(pt.inter_density)
                  << " agnostic_diff=" << format_value(pt.agnostic_diff_mean) << " (se "
                  << format_value(pt.agnostic_diff_se) << ")"
                  << " aware_diff=" << format_value(pt.aware_diff_mean) << " (se "
                  << format_value(pt.aware_diff_se) << ")"
                  << " agnostic_prefers_finer=" << yes_no(pt.agnostic_prefers_finer)
                  << " aware_prefers_coarser=" << yes_no(pt.aware_prefers_coarser)
                  << " contradiction=" << yes_no(pt.contradiction()) << "\n";

    SvgOptions svg_options;
    svg_options.title = "finer vs. coarser candidates against the planted truth";
    svg_options.x_label = "q";
    svg_options.y_label = "mean similarity";
    emit_curve_outputs(report.curves, o.out, o.svg, svg_options);
    return 0;
}

// ------------------------------------------------------------------ curve

struct CurveOpts {
    std::string graphs, truths, candidates;
    std::string x_values;
    std::string measures = kDefaultMeasures;
    std::string out, svg;
    bool one_based = false;
};

int run_curve(const CurveOpts& o) {
    namespace fs = std::filesystem;
    const std::vector<std::string> xs = split_csv_strings(o.x_values);
    const std::vector<MeasureSelector> measures = MeasureSelector::parse_list(o.measures);

    std::vector<CurvePoint> points;
    for (const std::string& x_text : xs) {
        double x = 0.0;
        try {
            std::size_t used = 0;
            x = std::stod(x_text, &used);
            if (used != x_text.size()) throw std::invalid_argument(x_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed x value '" + x_text + "'");
        }

        // Replicates follow the <x>_<r> naming convention, r = 0, 1, ...
        std::vector<std::vector<double>> rows;
        for (int r = 0;; ++r) {
            const std::string stem = x_text + "_" + std::to_string(r);
            const fs::path graph_path = fs::path(o.graphs) / (stem + ".edges");
            const fs::path truth_path = fs::path(o.truths) / (stem + ".part");
            const fs::path cand_path = fs::path(o.candidates) / (stem + ".part");
            if (!fs::exists(graph_path)) break;
            const Graph g = load_graph(graph_path.string(), o.one_based);
            const Partition truth =
                load_partition(truth_path.string(), g.vertex_count(), o.one_based);
            const Partition cand =
                load_partition(cand_path.string(), g.vertex_count(), o.one_based);
            std::vector<double> row;
            row.reserve(measures.size());
            for (const MeasureSelector& sel : measures) {
                try {
                    row.push_back(evaluate_measure(sel, g, truth, cand));
                } catch (const DegenerateMeasure&) {
                    row.push_back(std::numeric_limits<double>::quiet_NaN());
                }
            }
            rows.push_back(std::move(row));
        }
        if (rows.empty())
            throw ParseError(0, "no replicate files found for x = " + x_text + " (expected " +
                                    (fs::path(o.graphs) / (x_text + "_0.edges")).string() + ")");

        for (std::size_t c = 0; c < measures.size(); ++c) {
            double sum = 0.0;
            std::int64_t valid = 0;
            for (const auto& row : rows)
                if (!std::isnan(row[c])) {
                    sum += row[c];
                    ++valid;
                }
            CurvePoint pt;
            pt.x = x;
            pt.measure = measures[c].id();
            pt.trials = valid;
            pt.degenerate = static_cast<std::int64_t>(rows.size()) - valid;
            pt.mean = valid > 0 ? sum / static_cast<double>(valid)
                                : std::numeric_limits<double>::quiet_NaN();
            double ss = 0.0;
            if (valid > 1) {
                for (const auto& row : rows)
                    if (!std::isnan(row[c])) {
                        const double d = row[c] - pt.mean;
                        ss += d * d;
                    }
                pt.std_dev = std::sqrt(ss / static_cast<double>(valid - 1));
            }
            points.push_back(std::move(pt));
        }
    }

    SvgOptions svg_options;
    svg_options.title = "similarity curves";
    svg_options.x_label = "x";
    svg_options.y_label = "mean similarity";
    emit_curve_outputs(points, o.out, o.svg, svg_options);
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"graph-aware comparison of graph partitions"};
    app.require_subcommand(1);
    int exit_code = 0;

    // compare
    auto compare_opts = std::make_shared<CompareOpts>();
    {
        auto* cmd = app.add_subcommand("compare",
                                       "evaluate similarity measures between two partitions");
        cmd->add_option("--graph", compare_opts->graph, "edge list file")->required();
        cmd->add_option("--part-a,--a", compare_opts->a, "first partition file")->required();
        cmd->add_option("--part-b,--b", compare_opts->b, "second partition file")->required();
        cmd->add_option("--measures", compare_opts->measures,
                        "comma-separated measure ids (default: all)");
        cmd->add_flag("--one-based", compare_opts->one_based, "vertex ids start at 1");
        cmd->add_flag("--json", compare_opts->json, "print a JSON object");
        cmd->callback([compare_opts, &exit_code]() { exit_code = run_compare(*compare_opts); });
    }

    // represent
    auto represent_opts = std::make_shared<RepresentOpts>();
    {
        auto* cmd = app.add_subcommand(
            "represent", "canonical representative and induced partition of an edge "
                         "classification");
        cmd->add_option("--graph", represent_opts->graph, "edge list file")->required();
        cmd->add_option("--bits", represent_opts->bits,
                        "classification as a 0/1 string over the sorted edge list")
            ->required();
        cmd->add_flag("--one-based", represent_opts->one_based, "vertex ids start at 1");
        cmd->callback(
            [represent_opts, &exit_code]() { exit_code = run_represent(*represent_opts); });
    }

    // gen
    auto planted_opts = std::make_shared<GenPlantedOpts>();
    auto er_opts = std::make_shared<GenSimpleGraphOpts>();
    auto tree_opts = std::make_shared<GenSimpleGraphOpts>();
    auto proc1_opts = std::make_shared<GenPartitionOpts>();
    auto proc2_opts = std::make_shared<GenPartitionOpts>();
    {
        auto* gen = app.add_subcommand("gen", "generate random graphs and partitions");
        gen->require_subcommand(1);

        auto* graph = gen->add_subcommand("graph", "generate a random graph");
        graph->require_subcommand(1);

        auto* planted = graph->add_subcommand("planted",
                                              "planted-partition graph with exact edge counts");
        planted->add_option("--n", planted_opts->n, "vertex count (with --parts)");
        planted->add_option("--parts", planted_opts->parts, "number of equal ground-truth parts");
        planted->add_option("--truth", planted_opts->truth_file,
                            "ground-truth partition file (alternative to --n/--parts)");
        planted->add_option("--p", planted_opts->p, "intra-part edge density in [0, 1]");
        planted->add_option("--q", planted_opts->q, "inter-part edge density in [0, 1]");
        planted->add_option("--k1", planted_opts->k1, "exact intra-part edge count");
        planted->add_option("--k2", planted_opts->k2, "exact inter-part edge count");
        planted->add_option("--seed", planted_opts->seed, "random seed (default 0)");
        planted->add_option("--out", planted_opts->out, "output edge list (default stdout)");
        planted->add_option("--truth-out", planted_opts->truth_out,
                            "also write the ground-truth partition here");
        planted->add_flag("--one-based", planted_opts->one_based,
                          "vertex ids in --truth start at 1");
        planted->callback(
            [planted_opts, &exit_code]() { exit_code = run_gen_planted(*planted_opts); });

        auto* er = graph->add_subcommand("er", "uniform graph with exactly m edges");
        er->add_option("--n", er_opts->n, "vertex count")->required();
        er->add_option("--m", er_opts->m, "edge count")->required();
        er->add_option("--seed", er_opts->seed, "random seed (default 0)");
        er->add_option("--out", er_opts->out, "output edge list (default stdout)");
        er->callback([er_opts, &exit_code]() { exit_code = run_gen_er(*er_opts); });

        auto* tree = graph->add_subcommand("tree", "uniform random labeled tree");
        tree->add_option("--n", tree_opts->n, "vertex count")->required();
        tree->add_option("--seed", tree_opts->seed, "random seed (default 0)");
        tree->add_option("--out", tree_opts->out, "output edge list (default stdout)");
        tree->callback([tree_opts, &exit_code]() { exit_code = run_gen_tree(*tree_opts); });

        auto* part = gen->add_subcommand("partition", "generate a random partition of a graph");
        part->require_subcommand(1);

        auto* p1 = part->add_subcommand(
            "process1", "random connected partition with exactly k parts (spanning-tree "
                        "deletion)");
        p1->add_option("--graph", proc1_opts->graph, "edge list file")->required();
        p1->add_option("--k", proc1_opts->k, "number of parts")->required();
        p1->add_option("--seed", proc1_opts->seed, "random seed (default 0)");
        p1->add_option("--out", proc1_opts->out, "output partition (default stdout)");
        p1->add_flag("--one-based", proc1_opts->one_based, "vertex ids start at 1");
        p1->callback([proc1_opts, &exit_code]() { exit_code = run_gen_process1(*proc1_opts); });

        auto* p2 = part->add_subcommand(
            "process2", "partition induced by k uniformly selected edges");
        p2->add_option("--graph", proc2_opts->graph, "edge list file")->required();
        p2->add_option("--k", proc2_opts->k, "number of selected edges")->required();
        p2->add_option("--seed", proc2_opts->seed, "random seed (default 0)");
        p2->add_option("--out", proc2_opts->out, "output partition (default stdout)");
        p2->add_flag("--one-based", proc2_opts->one_based, "vertex ids start at 1");
        p2->callback([proc2_opts, &exit_code]() { exit_code = run_gen_process2(*proc2_opts); });
    }

    // baseline
    auto baseline_opts = std::make_shared<BaselineOpts>();
    {
        auto* cmd = app.add_subcommand(
            "baseline", "mean similarity between a fixed truth and random partitions");
        cmd->add_option("--mode", baseline_opts->mode, "'sizes' or 'edges'")->required();
        cmd->add_option("--graph", baseline_opts->graph, "edge list file")->required();
        cmd->add_option("--truth", baseline_opts->truth, "reference partition file")->required();
        cmd->add_option("--k-list", baseline_opts->k_list,
                        "comma-separated sweep values (part counts or edge counts)")
            ->required();
        cmd->add_option("--measures", baseline_opts->measures, "comma-separated measure ids");
        cmd->add_option("--trials", baseline_opts->trials, "trials per sweep value");
        cmd->add_option("--seed", baseline_opts->seed, "random seed (default 0)");
        cmd->add_option("--smooth", baseline_opts->smooth,
                        "odd moving-average window for the mean column (default 1)");
        cmd->add_option("--out", baseline_opts->out, "output CSV (default stdout)");
        cmd->add_option("--svg", baseline_opts->svg, "also plot to this SVG file");
        cmd->add_flag("--one-based", baseline_opts->one_based, "vertex ids start at 1");
        cmd->callback([baseline_opts, &exit_code]() { exit_code = run_baseline(*baseline_opts); });
    }

    // structure-sweep
    auto structure_opts = std::make_shared<StructureOpts>();
    {
        auto* cmd = app.add_subcommand(
            "structure-sweep",
            "baseline level of adjusted measures as planted structure varies");
        cmd->add_option("--parts", structure_opts->parts, "ground-truth part count")->required();
        cmd->add_option("--part-size", structure_opts->part_size, "vertices per part")
            ->required();
        cmd->add_option("--p", structure_opts->p, "intra-part density");
        cmd->add_option("--q-list", structure_opts->q_list, "comma-separated inter densities")
            ->required();
        cmd->add_option("--measures", structure_opts->measures, "comma-separated measure ids");
        cmd->add_option("--trials", structure_opts->trials, "trials per q");
        cmd->add_option("--seed", structure_opts->seed, "random seed (default 0)");
        cmd->add_option("--smooth", structure_opts->smooth,
                        "odd moving-average window for the mean column (default 1)");
        cmd->add_option("--out", structure_opts->out, "output CSV (default stdout)");
        cmd->add_option("--svg", structure_opts->svg, "also plot to this SVG file");
        cmd->callback(
            [structure_opts, &exit_code]() { exit_code = run_structure(*structure_opts); });
    }

    // lemma-check
    auto lemma_opts = std::make_shared<CheckOpts>();
    {
        auto* cmd = app.add_subcommand(
            "lemma-check", "expectation ordering of the edge-wise match ratio for "
                           "coarsenings and refinements");
        cmd->add_option("--parts", lemma_opts->parts, "ground-truth part count")->required();
        cmd->add_option("--part-size", lemma_opts->part_size, "vertices per part")->required();
        cmd->add_option("--p", lemma_opts->p, "intra-part density");
        cmd->add_option("--q", lemma_opts->q, "inter-part density");
        cmd->add_option("--coarse", lemma_opts->coarse, "coarsened candidate part count")
            ->required();
        cmd->add_option("--fine", lemma_opts->fine, "refined candidate part count")->required();
        cmd->add_option("--trials", lemma_opts->trials, "Monte Carlo trials");
        cmd->add_option("--seed", lemma_opts->seed, "random seed (default 0)");
        cmd->add_option("--out", lemma_opts->out, "write a CSV report here");
        cmd->callback([lemma_opts, &exit_code]() { exit_code = run_lemma_check(*lemma_opts); });
    }

    // theorem-check
    auto theorem_opts = std::make_shared<CheckOpts>();
    {
        auto* cmd = app.add_subcommand(
            "theorem-check", "ranking reversal between the agnostic and edge-wise match "
                             "ratios");
        cmd->add_option("--parts", theorem_opts->parts, "ground-truth part count")->required();
        cmd->add_option("--part-size", theorem_opts->part_size, "vertices per part")->required();
        cmd->add_option("--p", theorem_opts->p, "intra-part density");
        cmd->add_option("--q", theorem_opts->q, "inter-part density");
        cmd->add_option("--coarse", theorem_opts->coarse, "coarsened candidate part count")
            ->required();
        cmd->add_option("--fine", theorem_opts->fine, "refined candidate part count")->required();
        cmd->add_option("--trials", theorem_opts->trials, "Monte Carlo trials");
        cmd->add_option("--seed", theorem_opts->seed, "random seed (default 0)");
        cmd->add_option("--out", theorem_opts->out, "write a CSV report here");
        cmd->callback(
            [theorem_opts, &exit_code]() { exit_code = run_theorem_check(*theorem_opts); });
    }

    // resolution
    auto resolution_opts = std::make_shared<ResolutionOpts>();
    {
        auto* cmd = app.add_subcommand(
            "resolution",
            "agnostic vs. edge-wise preference between finer and coarser candidates");
        cmd->add_option("--parts", resolution_opts->parts, "ground-truth part count")->required();
        cmd->add_option("--part-size", resolution_opts->part_size, "vertices per part")
            ->required();
        cmd->add_option("--p", resolution_opts->p, "intra-part density");
        cmd->add_option("--q-list", resolution_opts->q_list, "comma-separated inter densities")
            ->required();
        cmd->add_option("--finer", resolution_opts->finer, "refined candidate part count")
            ->required();
        cmd->add_option("--coarser", resolution_opts->coarser, "coarsened candidate part count")
            ->required();
        cmd->add_option("--measures", resolution_opts->measures, "comma-separated measure ids");
        cmd->add_option("--trials", resolution_opts->trials, "trials per q");
        cmd->add_option("--seed", resolution_opts->seed, "random seed (default 0)");
        cmd->add_option("--out", resolution_opts->out, "output CSV (default stdout)");
        cmd->add_option("--svg", resolution_opts->svg, "also plot to this SVG file");
        cmd->callback(
            [resolution_opts, &exit_code]() { exit_code = run_resolution(*resolution_opts); });
    }

    // curve
    auto curve_opts = std::make_shared<CurveOpts>();
    {
        auto* cmd = app.add_subcommand(
            "curve", "aggregate measures over replicate (graph, truth, candidate) files");
        cmd->add_option("--graphs", curve_opts->graphs, "directory with <x>_<r>.edges files")
            ->required();
        cmd->add_option("--truths", curve_opts->truths, "directory with <x>_<r>.part files")
            ->required();
        cmd->add_option("--candidates", curve_opts->candidates,
                        "directory with <x>_<r>.part files")
            ->required();
        cmd->add_option("--x-values", curve_opts->x_values,
                        "comma-separated x values; also the file name stems")
            ->required();
        cmd->add_option("--measures", curve_opts->measures, "comma-separated measure ids");
        cmd->add_option("--out", curve_opts->out, "output CSV (default stdout)");
        cmd->add_option("--svg", curve_opts->svg, "also plot to this SVG file");
        cmd->add_flag("--one-based", curve_opts->one_based, "vertex ids start at 1");
        cmd->callback([curve_opts, &exit_code]() { exit_code = run_curve(*curve_opts); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateMeasure& e) {
        std::cerr << "degenerate measure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace pm
