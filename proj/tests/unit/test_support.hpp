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
#ifndef CFRECHET_TEST_SUPPORT_HPP_INCLUDED
#define CFRECHET_TEST_SUPPORT_HPP_INCLUDED

#include <cmath>
#include <random>
#include <vector>

#include "closedfrechet/geometry.hpp"

namespace cfrechet::testing {

inline Curve unit_square() { return Curve(2, {0, 0, 1, 0, 1, 1, 0, 1}); }

inline Curve translated(const Curve& c, double dx, double dy)
{
    std::vector<double> f(c.flat().begin(), c.flat().end());
    for (std::size_t i = 0; i < f.size(); i += 2) {
        f[i] += dx;
        f[i + 1] += dy;
    }
    return Curve(2, std::move(f));
}

inline Curve random_curve(std::mt19937_64& rng, std::size_t max_vertices)
{
    std::uniform_int_distribution<std::size_t> count(1, max_vertices);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    const std::size_t m = count(rng);
    std::vector<double> f(2 * m);
    for (double& v : f) {
        v = coord(rng);
    }
    return Curve(2, std::move(f));
}

inline Curve rotated(const Curve& c, std::size_t shift)
{
    std::vector<Point> v = c.vertices();
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift % v.size()), v.end());
    return Curve(v);
}

} // namespace cfrechet::testing

#endif
