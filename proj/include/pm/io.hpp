#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pm/errors.hpp"
#include "pm/experiments.hpp"
#include "pm/graph.hpp"
#include "pm/partition.hpp"

namespace pm {

// Edge-list text format: one "u v" pair per line, '#' starts a comment
// line, blank lines are skipped, and an optional "n <count>" line declares
// the vertex count (required to represent trailing isolated vertices).
// With one_based set, vertex ids are shifted down by one on ingest.
// Throws ParseError with the offending line number.
Graph parse_edge_list(std::string_view text, bool one_based = false);

// Canonical form: "n <count>" header followed by the sorted edge list.
// parse_edge_list(write_edge_list(g)) == g.
std::string write_edge_list(const Graph& g);

// Partition text format: one "vertex part" pair per line, '#' comments and
// blank lines skipped. Every vertex in [0, n) must appear exactly once.
// With one_based set, vertex ids are shifted down by one on ingest (part
// ids are relabeled canonically either way). Throws ParseError.
Partition parse_partition(std::string_view text, int vertex_count, bool one_based = false);

// One "vertex part" line per vertex with canonical part ids.
// parse_partition(write_partition(a), a.size()) == a.
std::string write_partition(const Partition& a);

// CSV with header "x,measure,mean,std,trials,degenerate", rows sorted by
// (measure, x), floats printed with 12 significant digits. Output is a
// pure function of the points, so equal curves give byte-equal files.
std::string emit_curve_csv(const std::vector<CurvePoint>& points);

// Parses a file produced by emit_curve_csv.
std::vector<CurvePoint> parse_curve_csv(std::string_view text);

// Self-contained SVG plot of the curves: one polyline per measure with a
// translucent ±1 std band, axes with tick labels, and a legend.
struct SvgOptions {
    int width = 960;
    int height = 600;
    std::string title;
    std::string x_label = "x";
    std::string y_label = "mean";
};

std::string emit_curve_svg(const std::vector<CurvePoint>& points, const SvgOptions& options = {});

// Reads a whole file; throws ParseError(0, ...) when it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

} // namespace pm
