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
#include "closedfrechet/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "closedfrechet/free_space.hpp"

namespace cfrechet::oracle {

namespace {

using Slice = std::optional<FreeInterval>;

void require_same_dim(const std::vector<Point>& p, const std::vector<Point>& q)
{
    if (p.empty() || q.empty()) {
        throw std::invalid_argument("polylines must have at least one vertex");
    }
    for (const auto& v : p) {
        if (v.dim() != q.front().dim()) {
            throw DimensionMismatch("polylines have different dimensions");
        }
    }
    for (const auto& v : q) {
        if (v.dim() != q.front().dim()) {
            throw DimensionMismatch("polylines have different dimensions");
        }
    }
}

bool all_within(const std::vector<Point>& pts, const Point& c, double eps)
{
    return std::all_of(pts.begin(), pts.end(), [&](const Point& v) { return distance(v, c) <= eps; });
}

Slice clamp_below(const Slice& s, double lo)
{
    if (!s || s->hi < lo) {
        return std::nullopt;
    }
    return FreeInterval{std::max(s->lo, lo), s->hi};
}

// Min-plus style bottleneck recurrence over an implicit distance table.
// Gives up and returns +inf once a whole row is at least `cutoff`.
template <class Dist>
double bottleneck_dp(std::size_t rows, std::size_t cols, Dist dist, double cutoff)
{
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(cols), cur(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        double row_min = inf;
        for (std::size_t j = 0; j < cols; ++j) {
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else if (i == 0) {
                best = cur[j - 1];
            } else if (j == 0) {
                best = prev[0];
            } else {
                best = std::min({prev[j], prev[j - 1], cur[j - 1]});
            }
            cur[j] = std::max(best, dist(i, j));
            row_min = std::min(row_min, cur[j]);
        }
        if (row_min >= cutoff) {
            return inf;
        }
        std::swap(prev, cur);
    }
    return prev[cols - 1];
}

} // namespace

bool open_curve_decide(const std::vector<Point>& p, const std::vector<Point>& q, double eps)
{
    require_same_dim(p, q);
    if (p.size() == 1) {
        return all_within(q, p.front(), eps);
    }
    if (q.size() == 1) {
        return all_within(p, q.front(), eps);
    }
    if (distance(p.front(), q.front()) > eps || distance(p.back(), q.back()) > eps) {
        return false;
    }
    const std::size_t cols = p.size() - 1;
    const std::size_t rows = q.size() - 1;

    // Reachable part of the horizontal edges of the current row, local parameters.
    std::vector<Slice> below(cols);
    bool chain = true;
    for (std::size_t i = 0; i < cols; ++i) {
        const Slice free = clip_segment_by_ball(p[i], p[i + 1], q[0], eps);
        if (chain && free && free->lo == 0.0) {
            below[i] = free;
            chain = free->hi == 1.0;
        } else {
            chain = false;
        }
    }

    bool left_chain = true;
    Slice left;
    for (std::size_t j = 0; j < rows; ++j) {
        const Slice left_free = clip_segment_by_ball(q[j], q[j + 1], p[0], eps);
        if (left_chain && left_free && left_free->lo == 0.0) {
            left = left_free;
            left_chain = left_free->hi == 1.0;
        } else {
            left = std::nullopt;
            left_chain = false;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            const Slice top_free = clip_segment_by_ball(p[i], p[i + 1], q[j + 1], eps);
            const Slice right_free = clip_segment_by_ball(q[j], q[j + 1], p[i + 1], eps);
            const Slice& bottom = below[i];
            Slice top, right;
            if (left) {
                top = top_free;
            } else if (bottom) {
                top = clamp_below(top_free, bottom->lo);
            }
            if (bottom) {
                right = right_free;
            } else if (left) {
                right = clamp_below(right_free, left->lo);
            }
            below[i] = top;
            left = right;
        }
    }
    const Slice& last = below[cols - 1];
    return (last && last->hi == 1.0) || (left && left->hi == 1.0);
}

double discrete_frechet(const std::vector<Point>& p, const std::vector<Point>& q)
{
    require_same_dim(p, q);
    return bottleneck_dp(
        p.size(), q.size(), [&](std::size_t i, std::size_t j) { return distance(p[i], q[j]); },
        std::numeric_limits<double>::infinity());
}

Curve refine(const Curve& c, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("refinement step must be positive");
    }
    const std::size_t k = c.dim();
    std::vector<double> flat;
    for (std::size_t e = 0; e < c.size(); ++e) {
        const auto a = c.vertex(e);
        const auto b = c.vertex(e + 1);
        const auto parts = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(distance(a, b) / h)));
        for (std::size_t t = 0; t < parts; ++t) {
            const double w = static_cast<double>(t) / static_cast<double>(parts);
            for (std::size_t d = 0; d < k; ++d) {
                flat.push_back(t == 0 ? a[d] : (1.0 - w) * a[d] + w * b[d]);
            }
        }
    }
    return Curve(k, std::move(flat));
}

Bracket cyclic_discrete_frechet_bracket(const Curve& x, const Curve& y, double h)
{
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("curves have different dimensions");
    }
    const Curve a = refine(x, h);
    const Curve b = refine(y, h);
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    std::vector<double> table(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            table[i * nb + j] = distance(a.vertex(i), b.vertex(j));
        }
    }

    // Cheap starts first so the cutoff tightens early.
    std::vector<std::size_t> order(na);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t s, std::size_t t) { return table[s * nb] < table[t * nb]; });

    std::atomic<double> best{std::numeric_limits<double>::infinity()};
    const auto count = static_cast<std::ptrdiff_t>(na);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const std::size_t s = order[static_cast<std::size_t>(k)];
        const double cutoff = best.load(std::memory_order_relaxed);
        if (table[s * nb] >= cutoff) {
            continue;
        }
        const double value = bottleneck_dp(
            na + 1, nb + 1, [&](std::size_t i, std::size_t j) { return table[((s + i) % na) * nb + j % nb]; },
            cutoff);
        double seen = best.load(std::memory_order_relaxed);
        while (value < seen && !best.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
        }
    }
    const double dd = best.load();
    return {std::max(hausdorff_distance(x, y), dd - h), dd};
}

std::vector<Point> doubled_subcurve(const Curve& x, double a, double b)
{
    const auto m = static_cast<double>(x.size());
    if (!(0.0 <= a && a <= b && b <= 2.0 * m)) {
        throw std::domain_error("subcurve parameters outside the doubled domain");
    }
    auto at = [&](double t) { return point_at(x, t > m ? t - m : t); };
    std::vector<Point> out{at(a)};
    for (double k = std::floor(a) + 1.0; k < b; k += 1.0) {
        out.push_back(x.vertex_point(static_cast<std::size_t>(k)));
    }
    if (b > a) {
        out.push_back(at(b));
    }
    return out;
}

std::vector<Point> unrolled(const Curve& y)
{
    std::vector<Point> out = y.vertices();
    out.push_back(y.vertex_point(0));
    return out;
}

bool sampled_shift_decide(const Curve& x, const Curve& y, double eps, std::size_t samples)
{
    if (samples == 0) {
        throw std::invalid_argument("at least one sample is required");
    }
    const auto m = static_cast<double>(x.size());
    std::vector<double> candidates;
    for (const auto& g : glued_intervals(build_free_space(x, y, eps), Row::bottom)) {
        for (double u : {g.lo, g.hi}) {
            if (u <= m) {
                candidates.push_back(u);
            }
        }
    }
    for (std::size_t k = 0; k < samples; ++k) {
        candidates.push_back(m * static_cast<double>(k) / static_cast<double>(samples));
    }
    const std::vector<Point> open_y = unrolled(y);
    return std::any_of(candidates.begin(), candidates.end(),
                       [&](double u) { return open_curve_decide(doubled_subcurve(x, u, u + m), open_y, eps); });
}

} // namespace cfrechet::oracle
