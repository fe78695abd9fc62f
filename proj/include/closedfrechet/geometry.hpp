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
#ifndef CLOSEDFRECHET_GEOMETRY_HPP_INCLUDED
#define CLOSEDFRECHET_GEOMETRY_HPP_INCLUDED

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace cfrechet {

/// Thrown when two curves (or a curve and a point) live in different spaces.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point of R^k, k >= 1, with finite coordinates.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
    [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }
    [[nodiscard]] double operator[](std::size_t k) const { return coords_[k]; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);
inline double distance(const Point& a, const Point& b) { return distance(a.coords(), b.coords()); }

/// Closed polygonal curve x_0..x_{m-1}. The closing vertex x_m = x_0 is implied
/// by the parameterization over [0, m] and never stored.
///
/// Vertices are kept in one flat buffer so the free-space kernels can hand out
/// spans without copying.
class Curve {
public:
    explicit Curve(const std::vector<Point>& vertices);
    Curve(std::size_t dim, std::vector<double> flat_coords);

    /// Number of vertices m (also the length of the parameter domain).
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    /// Vertex x_{i mod m}; accepts i = m for the closing vertex.
    [[nodiscard]] std::span<const double> vertex(std::size_t i) const noexcept
    {
        const std::size_t k = i % size_;
        return {coords_.data() + k * dim_, dim_};
    }
    [[nodiscard]] Point vertex_point(std::size_t i) const;
    [[nodiscard]] std::vector<Point> vertices() const;
    [[nodiscard]] std::span<const double> flat() const noexcept { return coords_; }

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    std::size_t dim_ = 0;
    std::size_t size_ = 0;
    std::vector<double> coords_;
};

/// f(t) = (1 - a) x_i + a x_{i+1} with i = floor(t), a = t - i; f(m) = x_0.
/// Throws std::domain_error for t outside [0, m].
Point point_at(const Curve& curve, double t);

/// Cyclic shift s(t; tau) of the parameter interval [0, m].
double cyclic_shift_param(double t, double tau, std::size_t m);

/// max_{i,j} d(x_i, y_j). Always an upper bound on the closed-curve Frechet distance.
double max_vertex_pair_distance(const Curve& x, const Curve& y);

/// Distance from a point to the segment [p, q].
double point_segment_distance(std::span<const double> point, std::span<const double> p,
                              std::span<const double> q);

/// Symmetric Hausdorff distance between the point sets of two closed polygons.
double hausdorff_distance(const Curve& x, const Curve& y);

/// sup over points of `from` of the distance to the polygon `to`.
double directed_hausdorff(const Curve& from, const Curve& to);

} // namespace cfrechet

#endif
