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
#include "closedfrechet/free_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfrechet {

namespace {

constexpr FreeInterval kEmptySlice{1.0, 0.0};

bool is_empty(const FreeInterval& s) noexcept { return s.lo > s.hi; }

void check_inputs(const Curve& x, const Curve& y, double eps)
{
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("curves have different dimensions");
    }
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("epsilon must be finite and non-negative");
    }
}

FreeInterval clip_or_empty(std::span<const double> p, std::span<const double> q, std::span<const double> c,
                           double eps)
{
    const auto slice = clip_segment_by_ball(p, q, c, eps);
    return slice ? *slice : kEmptySlice;
}

} // namespace

std::optional<FreeInterval> clip_segment_by_ball(std::span<const double> p, std::span<const double> q,
                                                 std::span<const double> center, double eps)
{
    if (p.size() != q.size() || p.size() != center.size()) {
        throw DimensionMismatch("segment and ball center have different dimensions");
    }
    const double eps2 = eps * eps;
    const bool start_inside = squared_distance(p, center) <= eps2;
    const bool end_inside = squared_distance(q, center) <= eps2;
    if (start_inside && end_inside) {
        return FreeInterval{0.0, 1.0};
    }

    // |p - center + t (q - p)|^2 - eps^2 = a t^2 + b t + c
    double a = 0.0, b = 0.0, c = -eps2;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double dir = q[k] - p[k];
        const double off = p[k] - center[k];
        a += dir * dir;
        b += 2.0 * dir * off;
        c += off * off;
    }
    if (a == 0.0) {
        // Degenerate segment; start_inside == end_inside here.
        return std::nullopt;
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        const double tol = 1e-12 * std::max(b * b, std::abs(4.0 * a * c));
        if (disc < -tol) {
            return std::nullopt;
        }
        disc = 0.0;
    }
    // Larger-magnitude root first, the other one by Vieta.
    const double big = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double t0, t1;
    if (big == 0.0) {
        t0 = t1 = 0.0;
    } else {
        t0 = big / a;
        t1 = c / big;
    }
    if (t0 > t1) {
        std::swap(t0, t1);
    }
    if (start_inside) {
        t0 = 0.0;
    }
    if (end_inside) {
        t1 = 1.0;
    }
    // An endpoint outside the ball never belongs to the slice, whatever the
    // rounding of the roots says; this keeps edges consistent at shared corners.
    if (!start_inside && t0 <= 0.0) {
        t0 = std::nextafter(0.0, 1.0);
    }
    if (!end_inside && t1 >= 1.0) {
        t1 = std::nextafter(1.0, 0.0);
    }
    if (t0 > t1) {
        return std::nullopt;
    }
    return FreeInterval{t0, t1};
}

std::optional<FreeInterval> clip_segment_by_ball(const Point& p, const Point& q, const Point& center, double eps)
{
    return clip_segment_by_ball(p.coords(), q.coords(), center.coords(), eps);
}

FreeSpaceGrid build_free_space(const Curve& x, const Curve& y, double eps)
{
    check_inputs(x, y, eps);
    auto data = std::make_shared<FreeSpaceGrid::Storage>();
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    data->m = m;
    data->n = n;
    data->eps = eps;
    data->top.resize(m * (n + 1));
    data->right.resize(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            data->top[i * (n + 1) + j] = clip_or_empty(x.vertex(i), x.vertex(i + 1), y.vertex(j), eps);
        }
        for (std::size_t j = 0; j < n; ++j) {
            data->right[i * n + j] = clip_or_empty(y.vertex(j), y.vertex(j + 1), x.vertex(i), eps);
        }
    }
    return FreeSpaceGrid(std::move(data), false);
}

FreeSpaceGrid build_free_space_parallel(const Curve& x, const Curve& y, double eps)
{
    check_inputs(x, y, eps);
    auto data = std::make_shared<FreeSpaceGrid::Storage>();
    const auto m = static_cast<std::ptrdiff_t>(x.size());
    const std::size_t n = y.size();
    data->m = x.size();
    data->n = n;
    data->eps = eps;
    data->top.resize(x.size() * (n + 1));
    data->right.resize(x.size() * n);
    FreeInterval* top = data->top.data();
    FreeInterval* right = data->right.data();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t si = 0; si < m; ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t j = 0; j <= n; ++j) {
            top[i * (n + 1) + j] = clip_or_empty(x.vertex(i), x.vertex(i + 1), y.vertex(j), eps);
        }
        for (std::size_t j = 0; j < n; ++j) {
            right[i * n + j] = clip_or_empty(y.vertex(j), y.vertex(j + 1), x.vertex(i), eps);
        }
    }
    return FreeSpaceGrid(std::move(data), false);
}

std::optional<FreeInterval> FreeSpaceGrid::top_unreflected(std::size_t i, std::size_t j) const
{
    const std::size_t m = data_->m;
    const std::size_t n = data_->n;
    if (i < 1 || i > 2 * m || j > n) {
        throw std::out_of_range("top edge index outside the doubled grid");
    }
    const std::size_t base = i > m ? i - m : i;
    const FreeInterval& s = data_->top[(base - 1) * (n + 1) + j];
    if (is_empty(s)) {
        return std::nullopt;
    }
    const auto origin = static_cast<double>(base - 1);
    FreeInterval out{origin + s.lo, origin + s.hi};
    if (i > m) {
        const auto shift = static_cast<double>(m);
        out.lo += shift;
        out.hi += shift;
    }
    return out;
}

std::optional<FreeInterval> FreeSpaceGrid::right_unreflected(std::size_t i, std::size_t j) const
{
    const std::size_t m = data_->m;
    const std::size_t n = data_->n;
    if (i > 2 * m || j < 1 || j > n) {
        throw std::out_of_range("right edge index outside the doubled grid");
    }
    const FreeInterval& s = data_->right[(i % m) * n + (j - 1)];
    if (is_empty(s)) {
        return std::nullopt;
    }
    const auto origin = static_cast<double>(j - 1);
    return FreeInterval{origin + s.lo, origin + s.hi};
}

std::optional<FreeInterval> FreeSpaceGrid::top(std::size_t i, std::size_t j) const
{
    if (!reflected_) {
        return top_unreflected(i, j);
    }
    const std::size_t m = data_->m;
    const std::size_t n = data_->n;
    if (i < 1 || i > 2 * m || j > n) {
        throw std::out_of_range("top edge index outside the doubled grid");
    }
    const auto s = top_unreflected(2 * m - i + 1, n - j);
    if (!s) {
        return std::nullopt;
    }
    const auto width = static_cast<double>(2 * m);
    return FreeInterval{width - s->hi, width - s->lo};
}

std::optional<FreeInterval> FreeSpaceGrid::right(std::size_t i, std::size_t j) const
{
    if (!reflected_) {
        return right_unreflected(i, j);
    }
    const std::size_t m = data_->m;
    const std::size_t n = data_->n;
    if (i > 2 * m || j < 1 || j > n) {
        throw std::out_of_range("right edge index outside the doubled grid");
    }
    const auto s = right_unreflected(2 * m - i, n - j + 1);
    if (!s) {
        return std::nullopt;
    }
    const auto height = static_cast<double>(n);
    return FreeInterval{height - s->hi, height - s->lo};
}

bool operator==(const FreeSpaceGrid& a, const FreeSpaceGrid& b)
{
    if (a.m() != b.m() || a.n() != b.n() || a.epsilon() != b.epsilon()) {
        return false;
    }
    const std::size_t m = a.m();
    const std::size_t n = a.n();
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 1; i <= 2 * m; ++i) {
            if (a.top(i, j) != b.top(i, j)) {
                return false;
            }
        }
    }
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i <= 2 * m; ++i) {
            if (a.right(i, j) != b.right(i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<FreeInterval> glued_intervals(const FreeSpaceGrid& grid, Row row)
{
    const std::size_t j = row == Row::bottom ? 0 : grid.n();
    std::vector<FreeInterval> out;
    for (std::size_t i = 1; i <= 2 * grid.m(); ++i) {
        const auto s = grid.top(i, j);
        if (!s) {
            continue;
        }
        if (!out.empty() && s->lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, s->hi);
        } else {
            out.push_back(*s);
        }
    }
    return out;
}

FreeSpaceGrid reflect_grid(const FreeSpaceGrid& grid)
{
    return FreeSpaceGrid(grid.data_, !grid.reflected_);
}

} // namespace cfrechet
