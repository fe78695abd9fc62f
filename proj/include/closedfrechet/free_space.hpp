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
#ifndef CLOSEDFRECHET_FREE_SPACE_HPP_INCLUDED
#define CLOSEDFRECHET_FREE_SPACE_HPP_INCLUDED

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "closedfrechet/geometry.hpp"

namespace cfrechet {

/// Closed interval [lo, hi] of parameter coordinates along one grid edge.
struct FreeInterval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    friend bool operator==(const FreeInterval&, const FreeInterval&) = default;
};

/// {t in [0,1] : |(1-t) p + t q - center| <= eps}. Empty or one closed interval,
/// since the ball is convex. Endpoints are exactly 0 or 1 whenever the
/// corresponding segment endpoint lies in the ball, so intervals of adjacent
/// edges glue exactly at shared vertices.
std::optional<FreeInterval> clip_segment_by_ball(std::span<const double> p, std::span<const double> q,
                                                 std::span<const double> center, double eps);
std::optional<FreeInterval> clip_segment_by_ball(const Point& p, const Point& q, const Point& center,
                                                 double eps);

/// Which boundary row of the doubled rectangle.
enum class Row { bottom, top };

/// Edge slices of the free space over the doubled rectangle [0, 2m] x [0, n].
///
///   top(i, j),   1 <= i <= 2m, 0 <= j <= n : free part of the horizontal edge
///                [i-1, i] x {j}, in u-coordinates;
///   right(i, j), 0 <= i <= 2m, 1 <= j <= n : free part of the vertical edge
///                {i} x [j-1, j], in v-coordinates.
///
/// Only the first copy (columns 1..m) is stored, as edge-local parameters.
/// The second copy is derived as `top(i - m, j) + m`, so periodicity holds
/// bit for bit. A reflected grid shares the same storage and maps
/// coordinates through (u, v) -> (2m - u, n - v) on access; reflecting twice
/// gives back the original object.
class FreeSpaceGrid {
public:
    [[nodiscard]] std::size_t m() const noexcept { return data_->m; }
    [[nodiscard]] std::size_t n() const noexcept { return data_->n; }
    [[nodiscard]] double epsilon() const noexcept { return data_->eps; }
    [[nodiscard]] bool reflected() const noexcept { return reflected_; }

    [[nodiscard]] std::optional<FreeInterval> top(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::optional<FreeInterval> right(std::size_t i, std::size_t j) const;

    /// Compares every edge slice through the accessors.
    friend bool operator==(const FreeSpaceGrid& a, const FreeSpaceGrid& b);

private:
    struct Storage {
        std::size_t m = 0;
        std::size_t n = 0;
        double eps = 0.0;
        // Edge-local parameters; an empty slice has lo > hi.
        std::vector<FreeInterval> top;   // (m) x (n + 1), column i - 1 for i in 1..m
        std::vector<FreeInterval> right; // (m) x (n),     column i for i in 0..m-1
    };

    FreeSpaceGrid(std::shared_ptr<const Storage> data, bool reflected)
        : data_(std::move(data))
        , reflected_(reflected)
    {
    }

    [[nodiscard]] std::optional<FreeInterval> top_unreflected(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::optional<FreeInterval> right_unreflected(std::size_t i, std::size_t j) const;

    std::shared_ptr<const Storage> data_;
    bool reflected_ = false;

    friend FreeSpaceGrid build_free_space(const Curve&, const Curve&, double);
    friend FreeSpaceGrid build_free_space_parallel(const Curve&, const Curve&, double);
    friend FreeSpaceGrid reflect_grid(const FreeSpaceGrid&);
};

/// Serial reference construction: 2mn segment/ball clips.
FreeSpaceGrid build_free_space(const Curve& x, const Curve& y, double eps);

/// OpenMP construction; produces a grid identical to build_free_space.
FreeSpaceGrid build_free_space_parallel(const Curve& x, const Curve& y, double eps);

/// Maximal closed intervals of the union of top(i, 0) (bottom) or top(i, n)
/// (top) over i = 1..2m. Slices that share an endpoint are merged.
std::vector<FreeInterval> glued_intervals(const FreeSpaceGrid& grid, Row row);

/// Grid of the free space point-reflected through (u, v) -> (2m - u, n - v).
FreeSpaceGrid reflect_grid(const FreeSpaceGrid& grid);

} // namespace cfrechet

#endif
