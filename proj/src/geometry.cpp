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
#include "closedfrechet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cfrechet {

namespace {

void require_finite(std::span<const double> coords)
{
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("point coordinates must be finite");
        }
    }
}

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += a[k] * b[k];
    }
    return s;
}

// a t^2 + b t + c
struct Quadratic {
    double a, b, c;
};

// Pieces of t -> |s(t) - segment|^2 for s(t) = p + t * dir. The true squared
// distance always coincides with one of these pieces.
void distance_pieces(std::span<const double> p, std::span<const double> dir, std::span<const double> q0,
                     std::span<const double> q1, std::vector<Quadratic>& out)
{
    const std::size_t k = p.size();
    std::vector<double> r0(k), r1(k), e(k);
    for (std::size_t c = 0; c < k; ++c) {
        r0[c] = p[c] - q0[c];
        r1[c] = p[c] - q1[c];
        e[c] = q1[c] - q0[c];
    }
    const double dd = dot(dir, dir);
    out.push_back({dd, 2.0 * dot(dir, r0), dot(r0, r0)});
    out.push_back({dd, 2.0 * dot(dir, r1), dot(r1, r1)});
    const double ee = dot(e, e);
    if (ee > 0.0) {
        const double de = dot(dir, e);
        const double re = dot(r0, e);
        out.push_back({dd - de * de / ee, 2.0 * dot(dir, r0) - 2.0 * de * re / ee, dot(r0, r0) - re * re / ee});
    }
}

void push_roots_in_unit(const Quadratic& q, std::vector<double>& out)
{
    const double scale = std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c)});
    if (scale == 0.0) {
        return;
    }
    auto keep = [&](double t) {
        if (t >= -1e-12 && t <= 1.0 + 1e-12) {
            out.push_back(std::clamp(t, 0.0, 1.0));
        }
    };
    if (std::abs(q.a) <= 1e-14 * scale) {
        if (q.b != 0.0) {
            keep(-q.c / q.b);
        }
        return;
    }
    double disc = q.b * q.b - 4.0 * q.a * q.c;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(q.b * q.b, std::abs(4.0 * q.a * q.c))) {
            return;
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double big = -0.5 * (q.b + std::copysign(root, q.b));
    if (big != 0.0) {
        keep(big / q.a);
        keep(q.c / big);
    } else {
        keep(0.0);
    }
}

double distance_to_polygon(std::span<const double> point, const Curve& poly)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < poly.size(); ++k) {
        best = std::min(best, point_segment_distance(point, poly.vertex(k), poly.vertex(k + 1)));
    }
    return best;
}

} // namespace

Point::Point(std::vector<double> coords)
    : coords_(std::move(coords))
{
    if (coords_.empty()) {
        throw std::invalid_argument("a point needs at least one coordinate");
    }
    require_finite(coords_);
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords))
{
}

double squared_distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b)
{
    return std::sqrt(squared_distance(a, b));
}

Curve::Curve(const std::vector<Point>& vertices)
{
    if (vertices.empty()) {
        throw std::invalid_argument("a curve needs at least one vertex");
    }
    dim_ = vertices.front().dim();
    size_ = vertices.size();
    coords_.reserve(dim_ * size_);
    for (const auto& v : vertices) {
        if (v.dim() != dim_) {
            throw DimensionMismatch("curve vertices have inconsistent dimensions");
        }
        coords_.insert(coords_.end(), v.coords().begin(), v.coords().end());
    }
}

Curve::Curve(std::size_t dim, std::vector<double> flat_coords)
    : dim_(dim)
    , coords_(std::move(flat_coords))
{
    if (dim_ == 0) {
        throw std::invalid_argument("curve dimension must be at least 1");
    }
    if (coords_.empty() || coords_.size() % dim_ != 0) {
        throw std::invalid_argument("flat coordinate buffer is empty or not a multiple of the dimension");
    }
    require_finite(coords_);
    size_ = coords_.size() / dim_;
}

Point Curve::vertex_point(std::size_t i) const
{
    const auto v = vertex(i);
    return Point(std::vector<double>(v.begin(), v.end()));
}

std::vector<Point> Curve::vertices() const
{
    std::vector<Point> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out.push_back(vertex_point(i));
    }
    return out;
}

Point point_at(const Curve& curve, double t)
{
    const auto m = static_cast<double>(curve.size());
    if (!(t >= 0.0 && t <= m)) {
        throw std::domain_error("curve parameter " + std::to_string(t) + " outside [0, " +
                                std::to_string(curve.size()) + "]");
    }
    if (t == m) {
        return curve.vertex_point(0);
    }
    const auto i = static_cast<std::size_t>(std::floor(t));
    const double alpha = t - static_cast<double>(i);
    const auto a = curve.vertex(i);
    const auto b = curve.vertex(i + 1);
    std::vector<double> out(curve.dim());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = alpha == 0.0 ? a[k] : (1.0 - alpha) * a[k] + alpha * b[k];
    }
    return Point(std::move(out));
}

double cyclic_shift_param(double t, double tau, std::size_t m)
{
    const auto len = static_cast<double>(m);
    if (!(t >= 0.0 && t <= len) || !(tau >= 0.0 && tau <= len)) {
        throw std::domain_error("cyclic shift arguments outside [0, m]");
    }
    const double s = t + tau;
    return s <= len ? s : s - len;
}

double max_vertex_pair_distance(const Curve& x, const Curve& y)
{
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("curves have different dimensions");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            best = std::max(best, squared_distance(x.vertex(i), y.vertex(j)));
        }
    }
    return std::sqrt(best);
}

double point_segment_distance(std::span<const double> point, std::span<const double> p,
                              std::span<const double> q)
{
    const std::size_t k = point.size();
    double ee = 0.0, pe = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const double e = q[c] - p[c];
        ee += e * e;
        pe += (point[c] - p[c]) * e;
    }
    if (ee == 0.0 || pe <= 0.0) {
        return distance(point, p);
    }
    if (pe >= ee) {
        return distance(point, q);
    }
    const double w = pe / ee;
    double s = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const double d = point[c] - (p[c] + w * (q[c] - p[c]));
        s += d * d;
    }
    return std::sqrt(s);
}

// The distance to `to` along one segment is the lower envelope of convex
// functions, so its maximum sits at a segment endpoint or where two of the
// pieces cross. Every candidate is evaluated against the true envelope.
double directed_hausdorff(const Curve& from, const Curve& to)
{
    if (from.dim() != to.dim()) {
        throw DimensionMismatch("curves have different dimensions");
    }
    const std::size_t k = from.dim();
    double best = 0.0;
    std::vector<Quadratic> pieces;
    std::vector<double> candidates;
    std::vector<double> dir(k), point(k);
    for (std::size_t s = 0; s < from.size(); ++s) {
        const auto p = from.vertex(s);
        const auto q = from.vertex(s + 1);
        for (std::size_t c = 0; c < k; ++c) {
            dir[c] = q[c] - p[c];
        }
        candidates.assign({0.0, 1.0});
        if (squared_distance(p, q) > 0.0) {
            pieces.clear();
            for (std::size_t e = 0; e < to.size(); ++e) {
                distance_pieces(p, dir, to.vertex(e), to.vertex(e + 1), pieces);
            }
            for (std::size_t a = 0; a < pieces.size(); ++a) {
                for (std::size_t b = a + 1; b < pieces.size(); ++b) {
                    push_roots_in_unit({pieces[a].a - pieces[b].a, pieces[a].b - pieces[b].b, pieces[a].c - pieces[b].c},
                                       candidates);
                }
            }
        }
        for (double t : candidates) {
            for (std::size_t c = 0; c < k; ++c) {
                point[c] = p[c] + t * dir[c];
            }
            best = std::max(best, distance_to_polygon(point, to));
        }
    }
    return best;
}

double hausdorff_distance(const Curve& x, const Curve& y)
{
    return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

} // namespace cfrechet
