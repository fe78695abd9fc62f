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
#ifndef CLOSEDFRECHET_REACH_PASS_HPP_INCLUDED
#define CLOSEDFRECHET_REACH_PASS_HPP_INCLUDED

#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "closedfrechet/free_space.hpp"
#include "closedfrechet/geometry.hpp"

namespace cfrechet {

/// Raised when a reachability pass breaks one of its structural invariants.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One piece (beg, val, end) of a standard-form function on an edge: either the
/// identity x -> x on [beg, end] (then val == end) or the constant val.
///
/// The kind is stored explicitly. A constant piece may carry val >= end, which
/// happens for glued-interval seeds, so `val == end` alone cannot tell them apart.
struct SpanTriple {
    double beg = 0.0;
    double val = 0.0;
    double end = 0.0;
    bool identity = false;

    static SpanTriple identity_on(double beg, double end) { return {beg, end, end, true}; }
    static SpanTriple constant(double beg, double value, double end) { return {beg, value, end, false}; }

    [[nodiscard]] double value_at(double x) const noexcept { return identity ? x : val; }

    friend bool operator==(const SpanTriple&, const SpanTriple&) = default;
};

/// Sorted, non-overlapping pieces of a function on one edge, with cuts at both ends.
/// All intervals but the last are read as half-open [beg, end).
class ReachDeque {
public:
    ReachDeque() = default;
    ReachDeque(std::initializer_list<SpanTriple> triples);

    [[nodiscard]] bool empty() const noexcept { return triples_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return triples_.size(); }
    [[nodiscard]] const SpanTriple& front() const { return triples_.front(); }
    [[nodiscard]] const SpanTriple& back() const { return triples_.back(); }
    [[nodiscard]] const std::deque<SpanTriple>& triples() const noexcept { return triples_; }

    /// Left and right end of the represented interval (c and d). Deque must be non-empty.
    [[nodiscard]] double lo() const { return triples_.front().beg; }
    [[nodiscard]] double hi() const { return triples_.back().end; }
    [[nodiscard]] double value_at_lo() const { return triples_.front().value_at(lo()); }
    [[nodiscard]] double value_at_hi() const { return triples_.back().value_at(hi()); }

    /// Drops everything left of x; the new leftmost piece starts at x.
    void cut_left(double x);
    /// Drops everything right of x; the new rightmost piece ends at x.
    void cut_right(double x);

    void push_front(const SpanTriple& t);
    void push_back(const SpanTriple& t);
    void pop_back();
    void clear() noexcept { triples_.clear(); }

    /// Number of push_front/push_back calls over the lifetime of this deque.
    [[nodiscard]] std::size_t insertions() const noexcept { return insertions_; }

    /// Sorted, non-overlapping, beg <= end, identity pieces have val == end.
    [[nodiscard]] bool well_formed() const;

    friend bool operator==(const ReachDeque& a, const ReachDeque& b) { return a.triples_ == b.triples_; }

private:
    std::deque<SpanTriple> triples_;
    std::size_t insertions_ = 0;
};

/// Reachable part of one cross edge and the extremal source coordinate on it,
/// which is a single value on such edges.
struct EdgeReach {
    std::optional<FreeInterval> interval;
    double value = 0.0;

    [[nodiscard]] bool present() const noexcept { return interval.has_value(); }
    friend bool operator==(const EdgeReach&, const EdgeReach&) = default;
};

/// Extremal bottom coordinate being tracked: the maximum (r) or the minimum (l).
enum class Side { rightmost, leftmost };

/// How the bottom row seeds its values: `identity` uses the point's own
/// coordinate, `seeded` the matching end of the glued free interval holding it.
enum class Init { seeded, identity };

/// Rightmost passes sweep rows with one deque per column (r is constant along
/// vertical edges). Leftmost passes sweep columns with one deque per row
/// (l is constant along horizontal edges); they require seeded init.
struct PassConfig {
    Side side = Side::rightmost;
    Init init = Init::identity;
};

struct PassOptions {
    bool check_invariants = true;
};

struct PassStats {
    std::size_t lanes = 0;
    std::size_t steps = 0;
    std::size_t insertions = 0;
    std::size_t max_lane_size = 0;

    /// No more than two insertions per step plus one per lane at initialization.
    [[nodiscard]] std::size_t insertion_bound() const noexcept { return 2 * lanes * steps + lanes; }
};

/// Updates the deque of the edge below a cell (c = q.lo(), d = q.hi()) to the
/// reachable part of the edge above it, given the reachable part of the cell's
/// incoming cross edge and the free slice [a, b] of the target edge.
///
///   target empty              -> empty
///   q empty                   -> [(a, r*, b)] if the cross edge is reachable
///   b < c                     -> [(a, r*, b)] or empty
///   d < a                     -> [(a, value(d), b)]
///   otherwise                 -> cut left at a, cut right at b, then prepend
///                                (a, r*, c) when a < c and the cross edge is
///                                reachable, append (d, value(d), b) when d < b
///
/// The rules only move values by position: the left part inherits the cross
/// edge's value and the right part the value at d. This is what both the
/// maximum and the minimum require, by monotonicity of either function.
void column_step(ReachDeque& q, const EdgeReach& incoming, const std::optional<FreeInterval>& target);

/// Reachable part of the outgoing cross edge of the same cell and its value.
/// Must be evaluated with the deque as it was before column_step.
///
/// With q non-empty every free point is reachable from (d, .) through the
/// convex cell and the value is value(d); otherwise only points at or above the
/// incoming edge's lower end are reachable, carrying its value.
EdgeReach right_edge_step(const ReachDeque& q, const EdgeReach& incoming,
                          const std::optional<FreeInterval>& target);

/// Initial lane deques and cross-edge seeds of a pass.
struct PassSeeds {
    std::vector<ReachDeque> lanes; // index 1..lanes, slot 0 unused
    std::vector<EdgeReach> cross;  // index 1..steps, slot 0 unused
};

PassSeeds initialize(const FreeSpaceGrid& grid, const PassConfig& cfg);

struct PassResult {
    std::vector<ReachDeque> lanes;      // final deques, index 1..lanes
    std::vector<EdgeReach> last_cross;  // cross edge leaving the last lane, index 1..steps
    PassStats stats;
};

/// Full sweep. For a rightmost pass lanes are the columns 1..2m and
/// `lanes[i]` represents the reachable part of the top edge T(i, n).
/// For a leftmost pass lanes are the rows 1..n and `last_cross[i]` is the
/// reachable part of T(i, n) with its constant value.
PassResult run_pass(const FreeSpaceGrid& grid, const PassConfig& cfg, const PassOptions& opts = {});

/// Bottom-edge data: reachable-from-top slice [c, d] of T(i, 0) and the
/// constant largest top coordinate reachable from it.
struct BottomEntry {
    double c = 0.0;
    double d = 0.0;
    double r_up = 0.0;

    friend bool operator==(const BottomEntry&, const BottomEntry&) = default;
};

/// Everything the decision needs: bottom entries for i = 1..m and the
/// reachable-from-bottom pieces of the top edges T(i, n), i = m+1..2m.
struct ReachProfile {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::optional<BottomEntry>> bottom; // bottom[i - 1], i = 1..m
    std::vector<std::vector<SpanTriple>> top;        // top[i - m - 1], i = m+1..2m
    PassStats forward;
    PassStats backward;

    [[nodiscard]] const std::optional<BottomEntry>& bottom_at(std::size_t i) const { return bottom.at(i - 1); }
    [[nodiscard]] const std::vector<SpanTriple>& top_at(std::size_t i) const { return top.at(i - m - 1); }
};

struct ProfileOptions {
    Init forward_init = Init::identity;
    PassOptions pass;
};

ReachProfile assemble_profile(const FreeSpaceGrid& grid, const ProfileOptions& opts = {});
ReachProfile assemble_profile(const Curve& x, const Curve& y, double eps, const ProfileOptions& opts = {});

} // namespace cfrechet

#endif
