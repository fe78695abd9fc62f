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
#ifndef CLOSEDFRECHET_ORACLE_HPP_INCLUDED
#define CLOSEDFRECHET_ORACLE_HPP_INCLUDED

#include <cstddef>
#include <vector>

#include "closedfrechet/geometry.hpp"

// Slow reference computations for validating the fast decision on small inputs.
namespace cfrechet::oracle {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Classic cell-by-cell propagation for open polylines: is there a monotone
/// path from (0, 0) to (|p| - 1, |q| - 1) in the free space?
bool open_curve_decide(const std::vector<Point>& p, const std::vector<Point>& q, double eps);

/// Discrete Frechet distance of two vertex sequences.
double discrete_frechet(const std::vector<Point>& p, const std::vector<Point>& q);

/// Splits every edge of a closed curve into ceil(length / h) equal parts.
Curve refine(const Curve& c, double h);

/// Bracket on the closed-curve distance from the discrete distance of
/// refinements with edges no longer than h, minimised over every refined
/// starting vertex of x. The upper end is that discrete value Dd, the lower
/// end max(Hausdorff, Dd - h).
Bracket cyclic_discrete_frechet_bracket(const Curve& x, const Curve& y, double h);

/// The part of the doubled curve x between parameters a <= b in [0, 2m],
/// as an open polyline.
std::vector<Point> doubled_subcurve(const Curve& x, double a, double b);

/// The closed curve y as the open polyline y_0, ..., y_{n-1}, y_0.
std::vector<Point> unrolled(const Curve& y);

/// Tries start offsets u on x: every end of a free bottom interval in [0, m]
/// and u = m k / samples. True certifies distance <= eps; false certifies nothing.
bool sampled_shift_decide(const Curve& x, const Curve& y, double eps, std::size_t samples);

} // namespace cfrechet::oracle

#endif
