/*
 * Copyright 2026 The closed-frechet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#include "closedfrechet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "closedfrechet/decision.hpp"

namespace cfrechet::cli {

namespace {

using nlohmann::json;

Curve finish_curve(std::size_t dim, std::vector<std::vector<double>> rows)
{
    if (rows.empty()) {
        throw CurveParseError("curve has no points");
    }
    if (rows.size() >= 2 && rows.back() == rows.front()) {
        throw DuplicateClosure("last point repeats the first; the closing vertex is implicit and must not be listed");
    }
    std::vector<double> flat;
    flat.reserve(dim * rows.size());
    for (const auto& r : rows) {
        flat.insert(flat.end(), r.begin(), r.end());
    }
    try {
        return Curve(dim, std::move(flat));
    } catch (const std::invalid_argument& e) {
        throw CurveParseError(e.what());
    }
}

Curve parse_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CurveParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
        throw CurveParseError("curve JSON needs the fields \"dim\" and \"points\"");
    }
    const json& dim_field = doc["dim"];
    if (!dim_field.is_number_unsigned() || dim_field.get<std::size_t>() == 0) {
        throw CurveParseError("\"dim\" must be a positive integer");
    }
    const auto dim = dim_field.get<std::size_t>();
    const json& points = doc["points"];
    if (!points.is_array()) {
        throw CurveParseError("\"points\" must be an array");
    }
    std::vector<std::vector<double>> rows;
    for (const json& p : points) {
        if (!p.is_array() || p.size() != dim) {
            throw CurveParseError("point " + std::to_string(rows.size()) + " does not have " + std::to_string(dim) +
                                  " coordinates");
        }
        std::vector<double> row;
        for (const json& c : p) {
            if (!c.is_number()) {
                throw CurveParseError("point " + std::to_string(rows.size()) + " has a non-numeric coordinate");
            }
            row.push_back(c.get<double>());
        }
        rows.push_back(std::move(row));
    }
    return finish_curve(dim, std::move(rows));
}

Curve parse_text(std::string_view text)
{
    std::vector<std::vector<double>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::vector<double> row;
        std::string tok;
        while (fields >> tok) {
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size()) {
                throw CurveParseError("line " + std::to_string(lineno) + ": '" + tok + "' is not a number");
            }
            row.push_back(v);
        }
        if (row.empty()) {
            continue;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw CurveParseError("line " + std::to_string(lineno) + ": inconsistent dimensions (" +
                                  std::to_string(row.size()) + " vs " + std::to_string(rows.front().size()) + ")");
        }
        rows.push_back(std::move(row));
    }
    const std::size_t dim = rows.empty() ? 0 : rows.front().size();
    return finish_curve(dim, std::move(rows));
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CurveParseError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw CurveParseError(dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

// Free u-range of cell column i at height v, as an interval of u.
std::optional<FreeInterval> cell_slice(const Curve& x, const Curve& y, double eps, std::size_t i, double v)
{
    const std::size_t m = x.size();
    const std::size_t base = (i - 1) % m;
    const Point g = point_at(y, v);
    const auto s = clip_segment_by_ball(x.vertex(base), x.vertex(base + 1), g.coords(), eps);
    if (!s) {
        return std::nullopt;
    }
    const auto origin = static_cast<double>(i - 1);
    return FreeInterval{origin + s->lo, origin + s->hi};
}

std::string fmt(double v)
{
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

int cmd_decide(double eps, bool as_json, const std::string& a, const std::string& b, std::ostream& out)
{
    const Curve x = load_curve(a);
    const Curve y = load_curve(b);
    const DecisionReport r = decide(x, y, eps);
    if (as_json) {
        json doc{{"answer", r.answer}, {"eps", eps}, {"m", x.size()}, {"n", y.size()}, {"witness", nullptr}};
        if (r.witness) {
            doc["witness"] = {{"bottom", r.witness->bottom}, {"piece", r.witness->piece}, {"u", r.witness->u}};
        }
        out << doc.dump() << '\n';
    } else {
        out << (r.answer ? "YES" : "NO") << '\n';
    }
    return r.answer ? 0 : 1;
}

int cmd_distance(double tol, const std::string& a, const std::string& b, std::ostream& out)
{
    const double d = compute_distance(load_curve(a), load_curve(b), tol);
    out << std::fixed << std::setprecision(9) << d << '\n';
    return 0;
}

int cmd_rank(const std::string& query_path, const std::string& dir, std::optional<double> eps,
             std::optional<std::size_t> top, double tol, std::ostream& out)
{
    const Curve query = load_curve(query_path);
    const auto files = corpus_files(dir);
    std::vector<Curve> corpus;
    corpus.reserve(files.size());
    for (const auto& f : files) {
        corpus.push_back(load_curve(f));
    }

    const auto count = static_cast<std::ptrdiff_t>(corpus.size());
    std::vector<double> score(corpus.size());
    std::vector<std::string> errors(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        try {
            score[i] = eps ? (decide(query, corpus[i], *eps).answer ? 1.0 : 0.0)
                           : compute_distance(query, corpus[i], tol);
        } catch (const std::exception& e) {
            errors[i] = files[i].string() + ": " + e.what();
        }
    }
    for (const auto& e : errors) {
        if (!e.empty()) {
            throw std::invalid_argument(e);
        }
    }

    if (eps) {
        for (std::size_t i = 0; i < files.size(); ++i) {
            if (score[i] == 1.0) {
                out << files[i].filename().string() << '\n';
            }
        }
        return 0;
    }
    std::vector<std::size_t> order(files.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
    order.resize(std::min(order.size(), *top));
    out << std::fixed << std::setprecision(9);
    for (std::size_t i : order) {
        out << files[i].filename().string() << '\t' << score[i] << '\n';
    }
    return 0;
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto records = run_bench(cfg);
    out << "m,n,wall_time_s,deque_insertions\n";
    for (const auto& r : records) {
        out << r.m << ',' << r.n << ',' << std::setprecision(9) << r.wall_time << ',' << r.deque_insertions << '\n';
    }
    if (records.size() >= 2) {
        err << "log-log slope of time vs m*n: " << std::setprecision(4) << loglog_slope(records) << '\n';
    }
    return 0;
}

int cmd_dump(double eps, double scale, const std::string& a, const std::string& b, const std::string& path)
{
    const std::string svg = render_svg(load_curve(a), load_curve(b), eps, scale);
    std::ofstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot write " + path);
    }
    f << svg;
    return 0;
}

} // namespace

Curve parse_curve(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_text(text);
}

Curve load_curve(const std::filesystem::path& path)
{
    try {
        return parse_curve(read_file(path));
    } catch (const DuplicateClosure& e) {
        throw DuplicateClosure(path.string() + ": " + e.what());
    } catch (const CurveParseError& e) {
        throw CurveParseError(path.string() + ": " + e.what());
    }
}

Curve perturbed_circle(std::size_t m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-0.04, 0.04);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    constexpr int harmonics = 4;
    double a[harmonics], p[harmonics];
    for (int k = 0; k < harmonics; ++k) {
        a[k] = amp(rng);
        p[k] = phase(rng);
    }
    std::vector<double> flat;
    flat.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
        double r = 1.0;
        for (int k = 0; k < harmonics; ++k) {
            r += a[k] * std::cos((k + 2) * t + p[k]);
        }
        flat.push_back(r * std::cos(t));
        flat.push_back(r * std::sin(t));
    }
    return Curve(2, std::move(flat));
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg)
{
    for (std::size_t s : cfg.sizes) {
        if (s == 0 || s * s > cfg.max_cells) {
            throw std::invalid_argument("bench size " + std::to_string(s) + " outside 1.." +
                                        std::to_string(static_cast<std::size_t>(std::sqrt(cfg.max_cells))));
        }
    }
    std::vector<BenchRecord> out;
    for (std::size_t s : cfg.sizes) {
        const Curve x = perturbed_circle(s, cfg.seed);
        const Curve y = perturbed_circle(s, cfg.seed + 1);
        ProfileOptions opts;
        opts.pass.check_invariants = false;
        for (std::size_t r = 0; r < cfg.repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const ReachProfile profile = assemble_profile(build_free_space(x, y, cfg.eps), opts);
            const DecisionReport verdict = decide_from_profile(profile);
            const auto t1 = std::chrono::steady_clock::now();
            static_cast<void>(verdict);
            out.push_back({s, s, std::chrono::duration<double>(t1 - t0).count(),
                           std::max(profile.forward.insertions, profile.backward.insertions)});
        }
    }
    return out;
}

double loglog_slope(const std::vector<BenchRecord>& records)
{
    if (records.size() < 2) {
        throw std::invalid_argument("slope needs at least two records");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto k = static_cast<double>(records.size());
    for (const auto& r : records) {
        const double lx = std::log(static_cast<double>(r.m * r.n));
        const double ly = std::log(r.wall_time);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = k * sxx - sx * sx;
    if (denom == 0.0) {
        throw std::invalid_argument("slope needs at least two distinct sizes");
    }
    return (k * sxy - sx * sy) / denom;
}

std::string render_svg(const Curve& x, const Curve& y, double eps, double scale)
{
    if (!(scale > 0.0)) {
        throw std::invalid_argument("scale must be positive");
    }
    const FreeSpaceGrid grid = build_free_space(x, y, eps);
    const ReachProfile profile = assemble_profile(grid);
    const PassResult forward = run_pass(grid, {Side::rightmost, Init::identity});
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    const auto width = static_cast<double>(2 * m);
    const auto height = static_cast<double>(n);
    auto sy = [&](double v) { return height - v; };
    constexpr int scanlines = 24;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width * scale) << "\" height=\""
        << fmt(height * scale) << "\" viewBox=\"0 0 " << 2 * m << ' ' << n << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << 2 * m << "\" height=\"" << n << "\" fill=\"#9a9a9a\"/>\n";

    svg << "<g fill=\"#f4f4ec\" stroke=\"none\">\n";
    for (std::size_t i = 1; i <= 2 * m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            // The free part of a cell is convex: trace left ends up, right ends down.
            std::vector<std::pair<double, FreeInterval>> rows;
            for (int k = 0; k <= scanlines; ++k) {
                const double v = static_cast<double>(j - 1) + static_cast<double>(k) / scanlines;
                if (const auto s = cell_slice(x, y, eps, i, std::min(v, height))) {
                    rows.emplace_back(v, *s);
                }
            }
            if (rows.empty()) {
                continue;
            }
            svg << "<polygon points=\"";
            for (const auto& [v, s] : rows) {
                svg << fmt(s.lo) << ',' << fmt(sy(v)) << ' ';
            }
            for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
                svg << fmt(it->second.hi) << ',' << fmt(sy(it->first)) << ' ';
            }
            svg << "\"/>\n";
        }
    }
    svg << "</g>\n";

    svg << "<g stroke=\"#555\" stroke-width=\"0.01\">\n";
    for (std::size_t i = 0; i <= 2 * m; ++i) {
        svg << "<line x1=\"" << i << "\" y1=\"0\" x2=\"" << i << "\" y2=\"" << n << "\"/>\n";
    }
    for (std::size_t j = 0; j <= n; ++j) {
        svg << "<line x1=\"0\" y1=\"" << j << "\" x2=\"" << 2 * m << "\" y2=\"" << j << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<line x1=\"" << m << "\" y1=\"0\" x2=\"" << m << "\" y2=\"" << n
        << "\" stroke=\"#222\" stroke-width=\"0.03\" stroke-dasharray=\"0.1,0.1\"/>\n";

    const double label = 0.18;
    svg << "<g stroke=\"#1f5fbf\" stroke-width=\"0.06\" fill=\"#1f5fbf\" font-size=\"" << label
        << "\" font-family=\"sans-serif\">\n";
    for (std::size_t i = 1; i <= 2 * m; ++i) {
        for (const SpanTriple& t : forward.lanes[i].triples()) {
            svg << "<line x1=\"" << fmt(t.beg) << "\" y1=\"0.03\" x2=\"" << fmt(t.end) << "\" y2=\"0.03\"/>\n";
            svg << "<circle cx=\"" << fmt(t.beg) << "\" cy=\"0.03\" r=\"0.04\"/>\n";
            svg << "<text x=\"" << fmt(t.beg) << "\" y=\"" << fmt(0.03 + 1.5 * label) << "\" stroke=\"none\">"
                << (t.identity ? "id" : fmt(t.val)) << "</text>\n";
        }
    }
    svg << "</g>\n";

    svg << "<g stroke=\"#c0392b\" stroke-width=\"0.06\" fill=\"#c0392b\" font-size=\"" << label
        << "\" font-family=\"sans-serif\">\n";
    for (std::size_t i = 1; i <= m; ++i) {
        const auto& e = profile.bottom_at(i);
        if (!e) {
            continue;
        }
        const double yb = sy(0.0) - 0.03;
        svg << "<line x1=\"" << fmt(e->c) << "\" y1=\"" << fmt(yb) << "\" x2=\"" << fmt(e->d) << "\" y2=\""
            << fmt(yb) << "\"/>\n";
        svg << "<circle cx=\"" << fmt(e->c) << "\" cy=\"" << fmt(yb) << "\" r=\"0.04\"/>\n";
        svg << "<text x=\"" << fmt(e->c) << "\" y=\"" << fmt(yb - 0.5 * label) << "\" stroke=\"none\">"
            << fmt(e->r_up) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Frechet distance between closed polygonal curves"};
    app.require_subcommand(1);

    std::string a, b;
    double eps = 0.0;
    bool as_json = false;
    auto* dec = app.add_subcommand("decide", "Print YES if the distance is at most --eps, NO otherwise");
    dec->add_option("--eps", eps, "Distance threshold")->required()->check(CLI::NonNegativeNumber);
    dec->add_flag("--json", as_json, "Print a JSON report with the witness offset");
    dec->add_option("first", a, "First curve file")->required();
    dec->add_option("second", b, "Second curve file")->required();

    double tol = 1e-6;
    auto* dist = app.add_subcommand("distance", "Approximate the distance by bisection");
    dist->add_option("--tol", tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    dist->add_option("first", a, "First curve file")->required();
    dist->add_option("second", b, "Second curve file")->required();

    std::string dir;
    std::size_t top = 0;
    auto* rank = app.add_subcommand("rank", "Match a query curve against every curve file in a directory");
    auto* rank_eps = rank->add_option("--eps", eps, "List files within this distance")->check(CLI::NonNegativeNumber);
    auto* rank_top = rank->add_option("--top", top, "List the K nearest files with their distances")
                         ->check(CLI::PositiveNumber);
    rank_eps->excludes(rank_top);
    rank->add_option("--tol", tol, "Tolerance of the distances for --top")->check(CLI::PositiveNumber);
    rank->add_option("query", a, "Query curve file")->required();
    rank->add_option("corpus", dir, "Directory of curve files")->required();

    BenchConfig bench_cfg;
    auto* bench = app.add_subcommand("bench", "Time the decision on random closed curves with m = n");
    bench->add_option("--sizes", bench_cfg.sizes, "Comma-separated sizes")->delimiter(',');
    bench->add_option("--repeats", bench_cfg.repeats, "Timed runs per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cfg.seed, "Seed of the curve generator");
    bench->add_option("--eps", bench_cfg.eps, "Distance threshold")->check(CLI::NonNegativeNumber);
    bench->add_option("--max-cells", bench_cfg.max_cells, "Refuse sizes with m*n above this");

    std::string svg_path;
    double scale = 40.0;
    auto* dump = app.add_subcommand("dump", "Write an SVG of the free space and reachable boundary slices");
    dump->add_option("--eps", eps, "Distance threshold")->required()->check(CLI::NonNegativeNumber);
    dump->add_option("-o,--output", svg_path, "Output SVG file")->required();
    dump->add_option("--scale", scale, "Pixels per unit")->check(CLI::PositiveNumber);
    dump->add_option("first", a, "First curve file")->required();
    dump->add_option("second", b, "Second curve file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dec) {
            return cmd_decide(eps, as_json, a, b, out);
        }
        if (*dist) {
            return cmd_distance(tol, a, b, out);
        }
        if (*rank) {
            if (!*rank_eps && !*rank_top) {
                err << "rank needs --eps or --top\n";
                return 2;
            }
            return cmd_rank(a, dir, *rank_eps ? std::optional<double>(eps) : std::nullopt,
                            *rank_top ? std::optional<std::size_t>(top) : std::nullopt, tol, out);
        }
        if (*bench) {
            return cmd_bench(bench_cfg, out, err);
        }
        return cmd_dump(eps, scale, a, b, svg_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace cfrechet::cli
