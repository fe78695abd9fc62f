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
#include <gtest/gtest.h>

#include <cmath>

#include "closedfrechet/geometry.hpp"
#include "test_support.hpp"

using namespace cfrechet;
using cfrechet::testing::translated;
using cfrechet::testing::unit_square;

TEST(Point, RejectsEmptyAndNonFinite)
{
    EXPECT_THROW(Point(std::vector<double>{}), std::invalid_argument);
    EXPECT_THROW(Point({1.0, NAN}), std::invalid_argument);
    EXPECT_THROW(Point({INFINITY}), std::invalid_argument);
}

TEST(Curve, Construction)
{
    const Curve s = unit_square();
    EXPECT_EQ(s.size(), 4u);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_EQ(s.vertex_point(4), Point({0, 0}));
    EXPECT_THROW(Curve(std::vector<Point>{}), std::invalid_argument);
    EXPECT_THROW(Curve(std::vector<Point>{Point{0, 0}, Point{1, 0, 0}}), DimensionMismatch);
    EXPECT_THROW(Curve(2, {0, 0, 1}), std::invalid_argument);
}

TEST(PointAt, SquareExamples)
{
    const Curve s = unit_square();
    EXPECT_EQ(point_at(s, 0), Point({0, 0}));
    EXPECT_EQ(point_at(s, 1.5), Point({1, 0.5}));
    EXPECT_EQ(point_at(s, 4), Point({0, 0}));
    EXPECT_THROW(point_at(s, -0.1), std::domain_error);
    EXPECT_THROW(point_at(s, 4.1), std::domain_error);
}

TEST(PointAt, IntegerParametersHitVerticesAndMotionIsLipschitz)
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        const Curve c = cfrechet::testing::random_curve(rng, 8);
        double longest = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_EQ(point_at(c, static_cast<double>(i)), c.vertex_point(i));
            longest = std::max(longest, distance(c.vertex(i), c.vertex(i + 1)));
        }
        std::uniform_real_distribution<double> t(0.0, static_cast<double>(c.size()));
        for (int k = 0; k < 20; ++k) {
            const double a = t(rng), b = t(rng);
            EXPECT_LE(distance(point_at(c, a), point_at(c, b)), longest * std::abs(a - b) + 1e-12);
        }
    }
}

TEST(CyclicShift, Examples)
{
    EXPECT_EQ(cyclic_shift_param(1, 2, 4), 3);
    EXPECT_EQ(cyclic_shift_param(3, 2, 4), 1);
    EXPECT_EQ(cyclic_shift_param(2, 0, 4), 2);
    EXPECT_THROW(cyclic_shift_param(5, 0, 4), std::domain_error);
}

TEST(MaxVertexPairDistance, Examples)
{
    const Curve s = unit_square();
    EXPECT_DOUBLE_EQ(max_vertex_pair_distance(s, s), std::sqrt(2.0));
    EXPECT_NEAR(max_vertex_pair_distance(s, translated(s, 0.3, 0)), std::sqrt(2.69), 1e-12);
    EXPECT_DOUBLE_EQ(max_vertex_pair_distance(s, Curve(2, {0, 0})), std::sqrt(2.0));
    EXPECT_THROW(max_vertex_pair_distance(s, Curve(3, {0, 0, 0})), DimensionMismatch);
}

TEST(Hausdorff, Examples)
{
    const Curve s = unit_square();
    EXPECT_EQ(hausdorff_distance(s, s), 0.0);
    EXPECT_NEAR(hausdorff_distance(s, translated(s, 0.3, 0)), 0.3, 1e-12);
    EXPECT_NEAR(hausdorff_distance(s, Curve(2, {0.5, 0.5})), std::sqrt(0.5), 1e-12);
    EXPECT_THROW(hausdorff_distance(s, Curve(1, {0})), DimensionMismatch);
}

TEST(Hausdorff, MaximumInsideAnEdge)
{
    // Farthest point of the segment from the W-shaped target is its midpoint (1, 0).
    const Curve seg(2, {0, 0, 2, 0});
    const Curve target(2, {0, 0, 1, -1, 2, 0, 1, -3});
    EXPECT_NEAR(directed_hausdorff(seg, target), std::sqrt(0.5), 1e-12);
}

TEST(Hausdorff, SymmetricAndDominatedBySampling)
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        const Curve x = cfrechet::testing::random_curve(rng, 7);
        const Curve y = cfrechet::testing::random_curve(rng, 7);
        const double h = hausdorff_distance(x, y);
        EXPECT_EQ(h, hausdorff_distance(y, x));
        // Dense sampling never exceeds the exact value and gets close to it.
        double sampled = 0.0;
        for (int k = 0; k <= 2000; ++k) {
            const Point p = point_at(x, static_cast<double>(x.size()) * k / 2000.0);
            double best = INFINITY;
            for (std::size_t e = 0; e < y.size(); ++e) {
                best = std::min(best, point_segment_distance(p.coords(), y.vertex(e), y.vertex(e + 1)));
            }
            sampled = std::max(sampled, best);
        }
        EXPECT_LE(sampled, directed_hausdorff(x, y) + 1e-12);
        EXPECT_GE(sampled, directed_hausdorff(x, y) - 0.01);
    }
}
