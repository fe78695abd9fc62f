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
#ifndef CLOSEDFRECHET_DECISION_HPP_INCLUDED
#define CLOSEDFRECHET_DECISION_HPP_INCLUDED

#include <cstddef>
#include <optional>

#include "closedfrechet/geometry.hpp"
#include "closedfrechet/reach_pass.hpp"

namespace cfrechet {

/// Bottom edge i (1..m), the position of the matching piece in the top list of
/// column i + m, and the start offset u in [c_i, d_i].
struct Witness {
    std::size_t bottom = 0;
    std::size_t piece = 0;
    double u = 0.0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct DecisionReport {
    bool answer = false;
    std::optional<Witness> witness; // present iff answer

    explicit operator bool() const noexcept { return answer; }
};

struct DecideOptions {
    /// Added to the right-hand side of the final comparison. Zero means exact.
    double slack = 0.0;
    /// Build the free space with the OpenMP kernel.
    bool parallel_build = false;
    ProfileOptions profile;
};

/// Looks for a bottom edge i and a piece (a, val, b) on T(i + m, n) with
///
///   max(c_i, a - m) <= min(d_i, b - m, r_i - m, R)
///
/// where r_i is the largest top coordinate reachable from edge i and R the
/// largest bottom coordinate reaching the piece (its right end for an identity
/// piece). The left-hand side is the witness u.
DecisionReport decide_from_profile(const ReachProfile& profile, double slack = 0.0);

/// Recomputes both sides of the inequality for a witness; true iff it holds.
bool witness_holds(const ReachProfile& profile, const Witness& w, double slack = 0.0);

/// Whether the Frechet distance of the closed curves x and y is at most eps.
DecisionReport decide(const Curve& x, const Curve& y, double eps, const DecideOptions& opts = {});

/// Bisects eps on [0, max_vertex_pair_distance]. The result D satisfies
/// decide(D) == true and lies within tol of the distance.
double compute_distance(const Curve& x, const Curve& y, double tol, const DecideOptions& opts = {});

} // namespace cfrechet

#endif
