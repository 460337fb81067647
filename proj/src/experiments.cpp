#include "pm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pm/agnostic.hpp"
#include "pm/aware.hpp"
#include "pm/errors.hpp"
#include "pm/random_models.hpp"

namespace pm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

std::string MeasureSelector::id() const {
    switch (kind) {
        case Kind::rand: return "ri";
        case Kind::adjusted_rand: return "ari";
        case Kind::pair_sim: return "pc_" + to_string(mean);
        case Kind::ami: return "ami";
        case Kind::graph_rand: return "ri_g";
        case Kind::graph_adjusted_rand: return "ari_g";
        case Kind::graph_pair_sim: return "pc_" + to_string(mean) + "_g";
        case Kind::graph_adjusted_pair_sim: return "apc_" + to_string(mean) + "_g";
    }
    throw std::invalid_argument("unknown measure kind");
}

bool MeasureSelector::graph_aware() const {
    switch (kind) {
        case Kind::graph_rand:
        case Kind::graph_adjusted_rand:
        case Kind::graph_pair_sim:
        case Kind::graph_adjusted_pair_sim: return true;
        default: return false;
    }
}

MeasureSelector MeasureSelector::parse(const std::string& id) {
    const auto make = [](Kind kind, MeanKind mean = MeanKind::arithmetic) {
        MeasureSelector sel;
        sel.kind = kind;
        sel.mean = mean;
        return sel;
    };
    if (id == "ri") return make(Kind::rand);
    if (id == "ari") return make(Kind::adjusted_rand);
    if (id == "ami") return make(Kind::ami);
    if (id == "ri_g") return make(Kind::graph_rand);
    if (id == "ari_g") return make(Kind::graph_adjusted_rand);
    if (id.starts_with("pc_")) {
        std::string rest = id.substr(3);
        if (rest.ends_with("_g"))
            return make(Kind::graph_pair_sim, parse_mean_kind(rest.substr(0, rest.size() - 2)));
        return make(Kind::pair_sim, parse_mean_kind(rest));
    }
    if (id.starts_with("apc_") && id.ends_with("_g")) {
        const std::string rest = id.substr(4, id.size() - 6);
        return make(Kind::graph_adjusted_pair_sim, parse_mean_kind(rest));
    }
    throw std::invalid_argument("unknown measure id '" + id + "'");
}

std::vector<MeasureSelector> MeasureSelector::parse_list(const std::string& csv) {
    std::vector<MeasureSelector> out;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty measure id in list");
        out.push_back(parse(token));
    }
    if (out.empty()) throw std::invalid_argument("empty measure list");
    return out;
}

std::vector<MeasureSelector> MeasureSelector::all() {
    std::vector<MeasureSelector> out;
    for (const char* id : {"ri", "ari", "pc_mn", "pc_gmn", "pc_min", "pc_max", "ami", "ri_g",
                           "ari_g", "pc_mn_g", "pc_gmn_g", "pc_min_g", "pc_max_g", "apc_mn_g",
                           "apc_gmn_g", "apc_min_g", "apc_max_g"})
        out.push_back(parse(id));
    return out;
}

double evaluate_measure(const MeasureSelector& sel, const Graph& g, const Partition& a,
                        const Partition& b) {
    switch (sel.kind) {
        case MeasureSelector::Kind::rand: return rand_index(a, b);
        case MeasureSelector::Kind::adjusted_rand: return adjusted_rand_index(a, b);
        case MeasureSelector::Kind::pair_sim: return pair_similarity(a, b, sel.mean);
        case MeasureSelector::Kind::ami: return adjusted_mutual_information(a, b);
        case MeasureSelector::Kind::graph_rand: return graph_rand_index(g, a, b);
        case MeasureSelector::Kind::graph_adjusted_rand: return adjusted_graph_rand_index(g, a, b);
        case MeasureSelector::Kind::graph_pair_sim:
            return graph_pair_similarity(g, a, b, sel.mean);
        case MeasureSelector::Kind::graph_adjusted_pair_sim:
            return adjusted_graph_pair_similarity(g, a, b, sel.mean);
    }
    throw std::invalid_argument("unknown measure kind");
}

std::vector<double> moving_average(const std::vector<double>& series, int window) {
    if (window < 1 || window % 2 == 0)
        throw std::invalid_argument("window must be a positive odd integer");
    const int n = static_cast<int>(series.size());
    const int half = window / 2;
    std::vector<double> out(series.size());
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (int j = lo; j <= hi; ++j) sum += series[j];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return out;
}

std::vector<ColumnStats> run_trials(std::int64_t trials, std::size_t columns, int threads,
                                    Seed seed,
                                    const std::function<std::vector<double>(Seed)>& trial_fn) {
    if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));

    const auto run_range = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t t = lo; t < hi; ++t) {
            rows[static_cast<std::size_t>(t)] = trial_fn(seed.at(static_cast<std::uint64_t>(t)));
            if (rows[static_cast<std::size_t>(t)].size() != columns)
                throw std::logic_error("trial produced the wrong number of columns");
        }
    };

    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::int64_t>(
                                                     trials, std::numeric_limits<int>::max()))));
    if (workers <= 1 || trials <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = trials * w / workers;
            const std::int64_t hi = trials * (w + 1) / workers;
            pool.emplace_back([&, lo, hi, w]() {
                try {
                    run_range(lo, hi);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Aggregate by trial index so the outcome is independent of scheduling.
    std::vector<ColumnStats> stats(columns);
    for (std::size_t c = 0; c < columns; ++c) {
        double sum = 0.0;
        std::int64_t valid = 0;
        for (const auto& row : rows)
            if (!std::isnan(row[c])) {
                sum += row[c];
                ++valid;
            }
        ColumnStats& s = stats[c];
        s.valid = valid;
        s.degenerate = trials - valid;
        s.mean = valid > 0 ? sum / static_cast<double>(valid) : kNaN;
        double ss = 0.0;
        if (valid > 1) {
            for (const auto& row : rows)
                if (!std::isnan(row[c])) {
                    const double d = row[c] - s.mean;
                    ss += d * d;
                }
            s.std_dev = std::sqrt(ss / static_cast<double>(valid - 1));
            s.std_error = s.std_dev / std::sqrt(static_cast<double>(valid));
        } else {
            s.std_dev = 0.0;
            s.std_error = 0.0;
        }
    }
    return stats;
}

namespace {

// Evaluates every measure, mapping degenerate values to NaN.
std::vector<double> measure_row(const std::vector<MeasureSelector>& measures, const Graph& g,
                                const Partition& a, const Partition& b) {
    std::vector<double> row;
    row.reserve(measures.size());
    for (const auto& sel : measures) {
        try {
            row.push_back(evaluate_measure(sel, g, a, b));
        } catch (const DegenerateMeasure&) {
            row.push_back(kNaN);
        }
    }
    return row;
}

void append_point(std::vector<CurvePoint>& points, double x,
                  const std::vector<MeasureSelector>& measures,
                  const std::vector<ColumnStats>& stats, const std::string& suffix = "") {
    for (std::size_t c = 0; c < measures.size(); ++c) {
        CurvePoint pt;
        pt.x = x;
        pt.measure = measures[c].id() + suffix;
        pt.mean = stats[c].mean;
        pt.std_dev = stats[c].std_dev;
        pt.trials = stats[c].valid;
        pt.degenerate = stats[c].degenerate;
        points.push_back(std::move(pt));
    }
}

} // namespace

std::vector<CurvePoint> baseline_size_sweep(const Graph& g, const Partition& truth,
                                            const std::vector<int>& part_counts,
                                            const std::vector<MeasureSelector>& measures,
                                            const SweepOptions& opt) {
    if (measures.empty()) throw std::invalid_argument("empty measure list");
    std::vector<CurvePoint> points;
    for (std::size_t i = 0; i < part_counts.size(); ++i) {
        const int k = part_counts[i];
        const Seed point_seed = opt.seed.at(i);
        const auto stats = run_trials(
            opt.trials, measures.size(), opt.threads, point_seed, [&](Seed trial_seed) {
                const Partition b = random_partition_process1(g, k, trial_seed);
                return measure_row(measures, g, truth, b);
            });
        append_point(points, static_cast<double>(k), measures, stats);
    }
    return points;
}

std::vector<CurvePoint> baseline_edge_sweep(const Graph& g, const Partition& truth,
                                            const std::vector<std::int64_t>& edge_counts,
                                            const std::vector<MeasureSelector>& measures,
                                            const SweepOptions& opt) {
    if (measures.empty()) throw std::invalid_argument("empty measure list");
    std::vector<CurvePoint> points;
    for (std::size_t i = 0; i < edge_counts.size(); ++i) {
        const std::int64_t k = edge_counts[i];
        const Seed point_seed = opt.seed.at(i);
        const auto stats = run_trials(
            opt.trials, measures.size(), opt.threads, point_seed, [&](Seed trial_seed) {
                const Partition b = random_partition_process2(g, k, trial_seed);
                return measure_row(measures, g, truth, b);
            });
        append_point(points, static_cast<double>(k), measures, stats);
    }
    return points;
}

std::vector<CurvePoint> structure_sweep(const StructureSweepConfig& config,
                                        const std::vector<MeasureSelector>& measures,
                                        const SweepOptions& opt) {
    if (measures.empty()) throw std::invalid_argument("empty measure list");
    if (!(config.intra_density > 0.0))
        throw std::invalid_argument("intra density must be positive");
    std::vector<CurvePoint> points;
    const int k = config.truth.part_count();
    for (std::size_t i = 0; i < config.inter_densities.size(); ++i) {
        const double q = config.inter_densities[i];
        const PlantedSpec spec =
            PlantedSpec::from_densities(config.truth, config.intra_density, q);
        const Seed point_seed = opt.seed.at(i);
        const auto stats = run_trials(
            opt.trials, measures.size(), opt.threads, point_seed, [&](Seed trial_seed) {
                const Graph g = planted_partition_graph(spec, trial_seed.at(0));
                if (!is_connected(g))
                    return std::vector<double>(measures.size(), kNaN);
                const Partition b = random_partition_process1(g, k, trial_seed.at(1));
                return measure_row(measures, g, config.truth, b);
            });
        append_point(points, q / config.intra_density, measures, stats);
    }
    return points;
}

namespace {

void validate_comparison_targets(const ComparisonSpec& spec) {
    const int k = spec.truth.part_count();
    const int n = spec.truth.size();
    if (spec.coarse_parts < 1 || spec.coarse_parts >= k)
        throw std::invalid_argument("coarse part target must lie in [1, truth part count)");
    if (spec.fine_parts <= k || spec.fine_parts > n)
        throw std::invalid_argument("fine part target must lie in (truth part count, n]");
}

} // namespace

LemmaReport lemma_check(const ComparisonSpec& spec, const SweepOptions& opt) {
    validate_comparison_targets(spec);
    LemmaReport report;
    report.coarser = random_coarsening(spec.truth, spec.coarse_parts, opt.seed.at(0));
    report.finer = random_refinement(spec.truth, spec.fine_parts, opt.seed.at(1));

    const PlantedSpec planted =
        PlantedSpec::from_densities(spec.truth, spec.intra_density, spec.inter_density);
    report.intra_density = planted.intra_density();
    report.inter_density = planted.inter_density();

    const Seed trial_base = opt.seed.at(2);
    const auto stats =
        run_trials(opt.trials, 2, opt.threads, trial_base, [&](Seed trial_seed) {
            const Graph g = planted_partition_graph(planted, trial_seed);
            std::vector<double> row(2, kNaN);
            try {
                row[0] = graph_pair_similarity(g, spec.truth, report.coarser,
                                               MeanKind::arithmetic);
            } catch (const DegenerateMeasure&) {
            }
            try {
                row[1] =
                    graph_pair_similarity(g, spec.truth, report.finer, MeanKind::arithmetic);
            } catch (const DegenerateMeasure&) {
            }
            return row;
        });

    report.coarse_side.applicable = report.intra_density >= report.inter_density;
    report.coarse_side.mc_mean = stats[0].mean;
    report.coarse_side.mc_std = stats[0].std_dev;
    report.coarse_side.std_error = stats[0].std_error;
    report.coarse_side.reference =
        pair_similarity(spec.truth, report.coarser, MeanKind::arithmetic);
    report.coarse_side.trials = stats[0].valid;
    report.coarse_side.degenerate = stats[0].degenerate;
    report.coarse_side.pass =
        !report.coarse_side.applicable ||
        report.coarse_side.mc_mean >=
            report.coarse_side.reference - 2.0 * report.coarse_side.std_error;

    report.fine_side.applicable = true;
    report.fine_side.mc_mean = stats[1].mean;
    report.fine_side.mc_std = stats[1].std_dev;
    report.fine_side.std_error = stats[1].std_error;
    report.fine_side.reference = pair_similarity(spec.truth, report.finer, MeanKind::arithmetic);
    report.fine_side.trials = stats[1].valid;
    report.fine_side.degenerate = stats[1].degenerate;
    report.fine_side.pass = report.fine_side.mc_mean <=
                            report.fine_side.reference + 2.0 * report.fine_side.std_error;
    return report;
}

TheoremReport theorem_check(const ComparisonSpec& spec, const SweepOptions& opt) {
    validate_comparison_targets(spec);
    TheoremReport report;
    report.coarser = random_coarsening(spec.truth, spec.coarse_parts, opt.seed.at(0));
    report.finer = random_refinement(spec.truth, spec.fine_parts, opt.seed.at(1));
    report.truth_pairs = intra_pair_count(spec.truth);
    report.coarse_pairs = intra_pair_count(report.coarser);
    report.fine_pairs = intra_pair_count(report.finer);

    const PlantedSpec planted =
        PlantedSpec::from_densities(spec.truth, spec.intra_density, spec.inter_density);
    report.intra_density = planted.intra_density();
    report.inter_density = planted.inter_density();

    const __int128 lhs = static_cast<__int128>(report.truth_pairs) * report.truth_pairs;
    const __int128 rhs = static_cast<__int128>(report.coarse_pairs) * report.fine_pairs;
    if (lhs >= rhs) {
        std::ostringstream msg;
        msg << "size condition violated: |P_A|^2 = " << static_cast<double>(lhs)
            << " must be < |P_B1|*|P_B2| = " << static_cast<double>(rhs);
        throw std::invalid_argument(msg.str());
    }

    const double extra = static_cast<double>(report.coarse_pairs - report.truth_pairs);
    const double missing = static_cast<double>(report.truth_pairs - report.fine_pairs);
    report.density_bound = report.inter_density * extra / missing;
    if (!(report.intra_density > report.density_bound)) {
        std::ostringstream msg;
        msg << "density condition violated: p = " << report.intra_density
            << " must be > q*(|P_B1|-|P_A|)/(|P_A|-|P_B2|) = " << report.density_bound;
        throw std::invalid_argument(msg.str());
    }

    report.agnostic_coarse = pair_similarity(spec.truth, report.coarser, MeanKind::arithmetic);
    report.agnostic_fine = pair_similarity(spec.truth, report.finer, MeanKind::arithmetic);
    report.agnostic_ordering = report.agnostic_coarse < report.agnostic_fine;

    const Seed trial_base = opt.seed.at(2);
    const auto stats =
        run_trials(opt.trials, 3, opt.threads, trial_base, [&](Seed trial_seed) {
            const Graph g = planted_partition_graph(planted, trial_seed);
            std::vector<double> row(3, kNaN);
            try {
                const double coarse =
                    graph_pair_similarity(g, spec.truth, report.coarser, MeanKind::arithmetic);
                const double fine =
                    graph_pair_similarity(g, spec.truth, report.finer, MeanKind::arithmetic);
                row[0] = coarse;
                row[1] = fine;
                row[2] = coarse - fine;
            } catch (const DegenerateMeasure&) {
            }
            return row;
        });

    report.mc_coarse_mean = stats[0].mean;
    report.mc_fine_mean = stats[1].mean;
    report.diff_mean = stats[2].mean;
    report.diff_std_error = stats[2].std_error;
    report.trials = stats[2].valid;
    report.degenerate = stats[2].degenerate;
    report.aware_ordering = report.diff_mean >= 3.0 * report.diff_std_error;
    return report;
}

bool ResolutionReport::contradiction_everywhere() const {
    for (const auto& p : points)
        if (!p.contradiction()) return false;
    return !points.empty();
}

ResolutionReport resolution_experiment(const ResolutionConfig& config,
                                       const std::vector<MeasureSelector>& measures,
                                       const SweepOptions& opt) {
    if (measures.empty()) throw std::invalid_argument("empty measure list");
    ComparisonSpec targets;
    targets.truth = config.truth;
    targets.coarse_parts = config.coarse_parts;
    targets.fine_parts = config.fine_parts;
    validate_comparison_targets(targets);

    const MeasureSelector agn = MeasureSelector::parse("ari");
    const MeasureSelector aware = MeasureSelector::parse("ari_g");

    ResolutionReport report;
    const std::size_t columns = 2 * measures.size() + 2;
    for (std::size_t i = 0; i < config.inter_densities.size(); ++i) {
        const double q = config.inter_densities[i];
        const PlantedSpec planted =
            PlantedSpec::from_densities(config.truth, config.intra_density, q);
        const Seed point_seed = opt.seed.at(i);
        const auto stats = run_trials(
            opt.trials, columns, opt.threads, point_seed, [&](Seed trial_seed) {
                const Partition finer =
                    random_refinement(config.truth, config.fine_parts, trial_seed.at(0));
                const Partition coarser =
                    random_coarsening(config.truth, config.coarse_parts, trial_seed.at(1));
                const Graph g = planted_partition_graph(planted, trial_seed.at(2));
                std::vector<double> row;
                row.reserve(columns);
                const auto fine_row = measure_row(measures, g, config.truth, finer);
                const auto coarse_row = measure_row(measures, g, config.truth, coarser);
                row.insert(row.end(), fine_row.begin(), fine_row.end());
                row.insert(row.end(), coarse_row.begin(), coarse_row.end());
                const auto agn_fine = measure_row({agn}, g, config.truth, finer)[0];
                const auto agn_coarse = measure_row({agn}, g, config.truth, coarser)[0];
                const auto aware_fine = measure_row({aware}, g, config.truth, finer)[0];
                const auto aware_coarse = measure_row({aware}, g, config.truth, coarser)[0];
                row.push_back(agn_fine - agn_coarse);
                row.push_back(aware_coarse - aware_fine);
                return row;
            });

        const double x = q;
        append_point(report.curves, x, measures,
                     {stats.begin(), stats.begin() + static_cast<std::ptrdiff_t>(measures.size())},
                     "_finer");
        append_point(report.curves, x, measures,
                     {stats.begin() + static_cast<std::ptrdiff_t>(measures.size()),
                      stats.begin() + static_cast<std::ptrdiff_t>(2 * measures.size())},
                     "_coarser");

        ResolutionPoint point;
        point.inter_density = q;
        point.agnostic_diff_mean = stats[columns - 2].mean;
        point.agnostic_diff_se = stats[columns - 2].std_error;
        point.aware_diff_mean = stats[columns - 1].mean;
        point.aware_diff_se = stats[columns - 1].std_error;
        point.trials = stats[columns - 2].valid;
        point.degenerate = stats[columns - 2].degenerate;
        point.agnostic_prefers_finer =
            point.agnostic_diff_mean >= 3.0 * point.agnostic_diff_se;
        point.aware_prefers_coarser = point.aware_diff_mean >= 3.0 * point.aware_diff_se;
        report.points.push_back(std::move(point));
    }
    return report;
}

} // namespace pm
