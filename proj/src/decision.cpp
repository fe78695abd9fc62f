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
#include "closedfrechet/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "closedfrechet/free_space.hpp"

namespace cfrechet {

namespace {

struct Sides {
    double lhs;
    double rhs;
};

Sides pair_sides(const BottomEntry& e, const SpanTriple& t, double m)
{
    const double reach_down = t.identity ? t.end : t.val;
    return {std::max(e.c, t.beg - m), std::min({e.d, t.end - m, e.r_up - m, reach_down})};
}

void check_shape(const ReachProfile& profile)
{
    if (profile.bottom.size() != profile.m || profile.top.size() != profile.m) {
        throw std::invalid_argument("profile must hold m bottom entries and top lists for columns m+1..2m");
    }
}

} // namespace

DecisionReport decide_from_profile(const ReachProfile& profile, double slack)
{
    check_shape(profile);
    const auto m = static_cast<double>(profile.m);
    for (std::size_t i = 1; i <= profile.m; ++i) {
        const auto& entry = profile.bottom_at(i);
        if (!entry) {
            continue;
        }
        const auto& pieces = profile.top_at(i + profile.m);
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            const Sides s = pair_sides(*entry, pieces[k], m);
            if (s.lhs <= s.rhs + slack) {
                return {true, Witness{i, k, s.lhs}};
            }
        }
    }
    return {};
}

bool witness_holds(const ReachProfile& profile, const Witness& w, double slack)
{
    check_shape(profile);
    if (w.bottom < 1 || w.bottom > profile.m) {
        return false;
    }
    const auto& entry = profile.bottom_at(w.bottom);
    const auto& pieces = profile.top_at(w.bottom + profile.m);
    if (!entry || w.piece >= pieces.size()) {
        return false;
    }
    const SpanTriple& t = pieces[w.piece];
    const double m = static_cast<double>(profile.m);
    const double reach_down = t.identity ? t.end : t.val;
    const double u = w.u;
    // u on the bottom slice, u + m on the top piece, both reach conditions.
    return entry->c <= u && u <= entry->d + slack && t.beg - m <= u && u <= t.end - m + slack &&
           u <= entry->r_up - m + slack && u <= reach_down + slack;
}

DecisionReport decide(const Curve& x, const Curve& y, double eps, const DecideOptions& opts)
{
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("curves have different dimensions");
    }
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("epsilon must be non-negative");
    }
    const FreeSpaceGrid grid = opts.parallel_build ? build_free_space_parallel(x, y, eps) : build_free_space(x, y, eps);
    return decide_from_profile(assemble_profile(grid, opts.profile), opts.slack);
}

double compute_distance(const Curve& x, const Curve& y, double tol, const DecideOptions& opts)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (decide(x, y, 0.0, opts).answer) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = max_vertex_pair_distance(x, y);
    // The upper bound is tight for some inputs; nudge it past rounding in the clips.
    for (int k = 0; !decide(x, y, hi, opts).answer; ++k) {
        if (k == 16) {
            throw std::runtime_error("decision stays negative above the vertex-pair bound");
        }
        hi = hi * (1.0 + 1e-12) + 1e-15;
    }
    if (hi <= tol) {
        return hi;
    }
    const int iterations = std::min(128, static_cast<int>(std::ceil(std::log2((hi - lo) / tol))));
    for (int k = 0; k < iterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (decide(x, y, mid, opts).answer) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace cfrechet
