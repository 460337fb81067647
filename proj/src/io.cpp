#include "pm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace pm {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, "malformed integer '" + std::string(token) + "'");
    return value;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

} // namespace

Graph parse_edge_list(std::string_view text, bool one_based) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::size_t> pair_lines;
    std::set<std::pair<int, int>> seen;
    std::int64_t declared_n = -1;
    int max_endpoint = -1;

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto tokens = split_tokens(lines[i]);
        if (tokens.empty() || tokens[0].front() == '#') continue;

        if (tokens[0] == "n") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "vertex count line must be 'n <count>'");
            if (declared_n >= 0) throw ParseError(line_no, "vertex count declared twice");
            declared_n = parse_int(tokens[1], line_no);
            if (declared_n < 0) throw ParseError(line_no, "vertex count must be non-negative");
            continue;
        }

        if (tokens.size() != 2)
            throw ParseError(line_no, "expected an edge line 'u v'");
        std::int64_t u = parse_int(tokens[0], line_no);
        std::int64_t v = parse_int(tokens[1], line_no);
        if (one_based) {
            if (u < 1 || v < 1)
                throw ParseError(line_no, "vertex ids are declared one-based but " +
                                              std::to_string(std::min(u, v)) + " appears");
            --u;
            --v;
        }
        if (u < 0 || v < 0)
            throw ParseError(line_no, "negative vertex id");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        std::pair<int, int> e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw ParseError(line_no, "duplicate edge (" + std::to_string(e.first) + ", " +
                                          std::to_string(e.second) + ")");
        max_endpoint = std::max(max_endpoint, e.second);
        pairs.push_back(e);
        pair_lines.push_back(line_no);
    }

    const std::int64_t n = declared_n >= 0 ? declared_n : max_endpoint + 1;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].second >= n)
            throw ParseError(pair_lines[i],
                             "endpoint " + std::to_string(pairs[i].second) +
                                 " outside declared vertex count " + std::to_string(n));
    return build_graph(static_cast<int>(n), std::move(pairs));
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Partition parse_partition(std::string_view text, int vertex_count, bool one_based) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<int> labels(static_cast<std::size_t>(vertex_count), -1);

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto tokens = split_tokens(lines[i]);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected an assignment line 'vertex part'");
        std::int64_t v = parse_int(tokens[0], line_no);
        const std::int64_t part = parse_int(tokens[1], line_no);
        if (one_based) {
            if (v < 1)
                throw ParseError(line_no, "vertex ids are declared one-based but " +
                                              std::to_string(v) + " appears");
            --v;
        }
        if (v < 0 || v >= vertex_count)
            throw ParseError(line_no, "vertex " + std::to_string(v) +
                                          " outside vertex count " +
                                          std::to_string(vertex_count));
        if (part < 0) throw ParseError(line_no, "negative part id");
        if (labels[static_cast<std::size_t>(v)] != -1)
            throw ParseError(line_no, "vertex " + std::to_string(v) + " assigned twice");
        labels[static_cast<std::size_t>(v)] = static_cast<int>(part);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (labels[static_cast<std::size_t>(v)] == -1)
            throw ParseError(0, "vertex " + std::to_string(v) + " missing from partition");
    return Partition(std::move(labels));
}

std::string write_partition(const Partition& a) {
    std::string out;
    for (int v = 0; v < a.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(a.label(v)) + "\n";
    return out;
}

std::string emit_curve_csv(const std::vector<CurvePoint>& points) {
    if (points.empty()) throw std::invalid_argument("no curve points to emit");
    std::vector<const CurvePoint*> order;
    order.reserve(points.size());
    for (const auto& p : points) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(), [](const CurvePoint* a, const CurvePoint* b) {
        return a->measure != b->measure ? a->measure < b->measure : a->x < b->x;
    });

    std::string out = "x,measure,mean,std,trials,degenerate\n";
    for (const CurvePoint* p : order) {
        out += format_double(p->x);
        out += ',';
        out += p->measure;
        out += ',';
        out += format_double(p->mean);
        out += ',';
        out += format_double(p->std_dev);
        out += ',';
        out += std::to_string(p->trials);
        out += ',';
        out += std::to_string(p->degenerate);
        out += '\n';
    }
    return out;
}

std::vector<CurvePoint> parse_curve_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || split_tokens(lines[0]).empty())
        throw ParseError(1, "missing CSV header");
    if (lines[0] != "x,measure,mean,std,trials,degenerate")
        throw ParseError(1, "unexpected CSV header");
    std::vector<CurvePoint> points;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::stringstream row{std::string(lines[i])};
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw ParseError(i + 1, "expected 6 comma-separated fields");
        CurvePoint p;
        p.x = std::stod(fields[0]);
        p.measure = fields[1];
        p.mean = std::stod(fields[2]);
        p.std_dev = std::stod(fields[3]);
        p.trials = std::stoll(fields[4]);
        p.degenerate = std::stoll(fields[5]);
        points.push_back(std::move(p));
    }
    return points;
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

std::string format_svg_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string format_tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

} // namespace

std::string emit_curve_svg(const std::vector<CurvePoint>& points, const SvgOptions& options) {
    if (points.empty()) throw std::invalid_argument("no curve points to plot");
    // Collect plottable points per measure, in x order.
    std::map<std::string, std::vector<const CurvePoint*>> series;
    for (const auto& p : points)
        if (!std::isnan(p.mean)) series[p.measure].push_back(&p);
    for (auto& [name, pts] : series)
        std::stable_sort(pts.begin(), pts.end(),
                         [](const CurvePoint* a, const CurvePoint* b) { return a->x < b->x; });

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const auto& [name, pts] : series)
        for (const CurvePoint* p : pts) {
            const double lo = p->mean - p->std_dev;
            const double hi = p->mean + p->std_dev;
            if (first) {
                x_min = x_max = p->x;
                y_min = lo;
                y_max = hi;
                first = false;
            } else {
                x_min = std::min(x_min, p->x);
                x_max = std::max(x_max, p->x);
                y_min = std::min(y_min, lo);
                y_max = std::max(y_max, hi);
            }
        }
    if (x_max <= x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max <= y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }

    const double ml = 70.0, mr = 190.0, mt = 42.0, mb = 52.0;
    const double pw = options.width - ml - mr;
    const double ph = options.height - mt - mb;
    const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    const auto py = [&](double y) { return mt + (1.0 - (y - y_min) / (y_max - y_min)) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(options.width) + "\" height=\"" + std::to_string(options.height) +
           "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
           std::to_string(options.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg += "<text x=\"" + format_svg_num(ml + pw / 2) +
               "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
               "text-anchor=\"middle\">" +
               options.title + "</text>\n";

    // Axes and ticks.
    svg += "<g stroke=\"#333333\" stroke-width=\"1\">\n";
    svg += "<line x1=\"" + format_svg_num(ml) + "\" y1=\"" + format_svg_num(mt + ph) +
           "\" x2=\"" + format_svg_num(ml + pw) + "\" y2=\"" + format_svg_num(mt + ph) + "\"/>\n";
    svg += "<line x1=\"" + format_svg_num(ml) + "\" y1=\"" + format_svg_num(mt) + "\" x2=\"" +
           format_svg_num(ml) + "\" y2=\"" + format_svg_num(mt + ph) + "\"/>\n";
    svg += "</g>\n";
    const int ticks = 5;
    for (int i = 0; i < ticks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / (ticks - 1);
        const double fy = y_min + (y_max - y_min) * i / (ticks - 1);
        svg += "<line x1=\"" + format_svg_num(px(fx)) + "\" y1=\"" + format_svg_num(mt + ph) +
               "\" x2=\"" + format_svg_num(px(fx)) + "\" y2=\"" + format_svg_num(mt + ph + 5) +
               "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + format_svg_num(px(fx)) + "\" y=\"" + format_svg_num(mt + ph + 18) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               format_tick(fx) + "</text>\n";
        svg += "<line x1=\"" + format_svg_num(ml - 5) + "\" y1=\"" + format_svg_num(py(fy)) +
               "\" x2=\"" + format_svg_num(ml) + "\" y2=\"" + format_svg_num(py(fy)) +
               "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + format_svg_num(ml - 8) + "\" y=\"" + format_svg_num(py(fy) + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               format_tick(fy) + "</text>\n";
    }
    svg += "<text x=\"" + format_svg_num(ml + pw / 2) + "\" y=\"" +
           format_svg_num(mt + ph + 40) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           options.x_label + "</text>\n";
    svg += "<text x=\"18\" y=\"" + format_svg_num(mt + ph / 2) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           format_svg_num(mt + ph / 2) + ")\">" + options.y_label + "</text>\n";

    // Bands, lines and legend.
    std::size_t idx = 0;
    for (const auto& [name, pts] : series) {
        const char* color = kPalette[idx % (sizeof(kPalette) / sizeof(kPalette[0]))];
        if (pts.size() >= 2) {
            std::string band = "<polygon fill=\"" + std::string(color) +
                               "\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
            for (const CurvePoint* p : pts)
                band += format_svg_num(px(p->x)) + "," +
                        format_svg_num(py(p->mean + p->std_dev)) + " ";
            for (auto it = pts.rbegin(); it != pts.rend(); ++it)
                band += format_svg_num(px((*it)->x)) + "," +
                        format_svg_num(py((*it)->mean - (*it)->std_dev)) + " ";
            band += "\"/>\n";
            svg += band;
        }
        std::string line = "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                           "\" stroke-width=\"1.6\" points=\"";
        for (const CurvePoint* p : pts)
            line += format_svg_num(px(p->x)) + "," + format_svg_num(py(p->mean)) + " ";
        line += "\"/>\n";
        svg += line;
        for (const CurvePoint* p : pts)
            svg += "<circle cx=\"" + format_svg_num(px(p->x)) + "\" cy=\"" +
                   format_svg_num(py(p->mean)) + "\" r=\"2.2\" fill=\"" + color + "\"/>\n";

        const double ly = mt + 14.0 + 18.0 * static_cast<double>(idx);
        svg += "<line x1=\"" + format_svg_num(ml + pw + 12) + "\" y1=\"" + format_svg_num(ly) +
               "\" x2=\"" + format_svg_num(ml + pw + 34) + "\" y2=\"" + format_svg_num(ly) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + format_svg_num(ml + pw + 40) + "\" y=\"" + format_svg_num(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + name + "</text>\n";
        ++idx;
    }
    svg += "</svg>\n";
    return svg;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed to write '" + path + "'");
}

} // namespace pm
