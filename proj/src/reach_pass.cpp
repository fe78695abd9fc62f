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
#include "closedfrechet/reach_pass.hpp"

#include <algorithm>
#include <string>

namespace cfrechet {

namespace {

void fail(const std::string& what)
{
    throw InvariantViolation(what);
}

// Glued interval holding the slice s; slices are visited left to right.
class GluedLookup {
public:
    explicit GluedLookup(std::vector<FreeInterval> glued)
        : glued_(std::move(glued))
    {
    }

    const FreeInterval& containing(const FreeInterval& s)
    {
        while (pos_ < glued_.size() && glued_[pos_].hi < s.lo) {
            ++pos_;
        }
        if (pos_ == glued_.size() || !(glued_[pos_].lo <= s.lo && s.hi <= glued_[pos_].hi)) {
            fail("free slice outside every glued interval");
        }
        return glued_[pos_];
    }

private:
    std::vector<FreeInterval> glued_;
    std::size_t pos_ = 0;
};

// Monotone along the deque: non-decreasing for maxima, non-increasing for minima.
bool values_monotone(const ReachDeque& q, Side side)
{
    const auto& t = q.triples();
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const double left = t[k].value_at(t[k].end);
        const double right = t[k + 1].value_at(t[k + 1].beg);
        if (side == Side::rightmost ? left > right : left < right) {
            return false;
        }
    }
    return true;
}

} // namespace

ReachDeque::ReachDeque(std::initializer_list<SpanTriple> triples)
    : triples_(triples)
{
}

void ReachDeque::cut_left(double x)
{
    // A non-final piece ending at x is half-open and holds nothing right of x.
    while (!triples_.empty() && (triples_.front().end < x || (triples_.front().end == x && triples_.size() > 1))) {
        triples_.pop_front();
    }
    if (!triples_.empty() && triples_.front().beg < x) {
        triples_.front().beg = x;
    }
}

void ReachDeque::cut_right(double x)
{
    while (!triples_.empty() && triples_.back().beg > x) {
        triples_.pop_back();
    }
    if (!triples_.empty() && triples_.back().end > x) {
        SpanTriple& t = triples_.back();
        t.end = x;
        if (t.identity) {
            t.val = x;
        }
    }
}

void ReachDeque::push_front(const SpanTriple& t)
{
    triples_.push_front(t);
    ++insertions_;
}

void ReachDeque::push_back(const SpanTriple& t)
{
    triples_.push_back(t);
    ++insertions_;
}

void ReachDeque::pop_back()
{
    triples_.pop_back();
}

bool ReachDeque::well_formed() const
{
    for (std::size_t k = 0; k < triples_.size(); ++k) {
        const SpanTriple& t = triples_[k];
        if (!(t.beg <= t.end) || (t.identity && t.val != t.end)) {
            return false;
        }
        if (k + 1 < triples_.size() && t.end > triples_[k + 1].beg) {
            return false;
        }
    }
    return true;
}

void column_step(ReachDeque& q, const EdgeReach& incoming, const std::optional<FreeInterval>& target)
{
    if (!target) {
        q.clear();
        return;
    }
    const double a = target->lo;
    const double b = target->hi;
    if (q.empty()) {
        if (incoming.present()) {
            q.push_back(SpanTriple::constant(a, incoming.value, b));
        }
        return;
    }
    const double c = q.lo();
    const double d = q.hi();
    const double value_d = q.value_at_hi();
    if (b < c) {
        q.clear();
        if (incoming.present()) {
            q.push_back(SpanTriple::constant(a, incoming.value, b));
        }
        return;
    }
    if (d < a) {
        q.clear();
        q.push_back(SpanTriple::constant(a, value_d, b));
        return;
    }
    if (c < a) {
        q.cut_left(a);
    }
    if (b < d) {
        q.cut_right(b);
    }
    if (a < c && incoming.present()) {
        q.push_front(SpanTriple::constant(a, incoming.value, c));
    }
    if (d < b) {
        // A point piece left at d by the cut carries value_d already.
        if (q.back().beg == d && q.back().end == d) {
            q.pop_back();
        }
        q.push_back(SpanTriple::constant(d, value_d, b));
    }
}

EdgeReach right_edge_step(const ReachDeque& q, const EdgeReach& incoming, const std::optional<FreeInterval>& target)
{
    if (!target) {
        return {};
    }
    if (!q.empty()) {
        return {target, q.value_at_hi()};
    }
    if (incoming.present()) {
        const double lo = std::max(target->lo, incoming.interval->lo);
        if (lo <= target->hi) {
            return {FreeInterval{lo, target->hi}, incoming.value};
        }
    }
    return {};
}

PassSeeds initialize(const FreeSpaceGrid& grid, const PassConfig& cfg)
{
    if (cfg.side == Side::leftmost && cfg.init != Init::seeded) {
        throw std::invalid_argument("a leftmost pass needs seeded initialization");
    }
    const std::size_t m = grid.m();
    const std::size_t n = grid.n();
    const bool rightmost = cfg.side == Side::rightmost;
    const std::size_t lanes = rightmost ? 2 * m : n;
    const std::size_t steps = rightmost ? n : 2 * m;

    PassSeeds seeds;
    seeds.lanes.resize(lanes + 1);
    seeds.cross.resize(steps + 1);

    const auto glued = glued_intervals(grid, Row::bottom);
    const bool origin_free = !glued.empty() && glued.front().lo == 0.0;
    // Seed value of the origin: its own coordinate, or the end of its glued interval.
    double origin_value = 0.0;
    if (origin_free && rightmost && cfg.init == Init::seeded) {
        origin_value = glued.front().hi;
    }

    // Bottom row: lane deques for rightmost, cross seeds for leftmost.
    GluedLookup lookup(glued);
    for (std::size_t i = 1; i <= 2 * m; ++i) {
        const auto s = grid.top(i, 0);
        if (!s) {
            continue;
        }
        const FreeInterval& g = lookup.containing(*s);
        if (rightmost) {
            seeds.lanes[i].push_back(cfg.init == Init::identity ? SpanTriple::identity_on(s->lo, s->hi)
                                                               : SpanTriple::constant(s->lo, g.hi, s->hi));
        } else {
            seeds.cross[i] = EdgeReach{s, g.lo};
        }
    }

    // Left column {0} x [0, n]: reachable from the bottom only straight up from the origin.
    bool reachable = origin_free;
    for (std::size_t j = 1; j <= n && reachable; ++j) {
        const auto s = grid.right(0, j);
        if (!s || s->lo != static_cast<double>(j - 1)) {
            break;
        }
        if (rightmost) {
            seeds.cross[j] = EdgeReach{s, origin_value};
        } else {
            seeds.lanes[j].push_back(SpanTriple::constant(s->lo, origin_value, s->hi));
        }
        reachable = s->hi == static_cast<double>(j);
    }
    return seeds;
}

PassResult run_pass(const FreeSpaceGrid& grid, const PassConfig& cfg, const PassOptions& opts)
{
    PassSeeds seeds = initialize(grid, cfg);
    const bool rightmost = cfg.side == Side::rightmost;
    const std::size_t lanes = seeds.lanes.size() - 1;
    const std::size_t steps = seeds.cross.size() - 1;

    PassResult result;
    result.lanes = std::move(seeds.lanes);
    result.last_cross = std::move(seeds.cross);
    result.stats.lanes = lanes;
    result.stats.steps = steps;

    // Cell (k, s) needs (k - 1, s) and (k, s - 1) first; last_cross[s] carries
    // the cross edge between consecutive lanes of step s.
    auto visit = [&](std::size_t k, std::size_t s) {
        ReachDeque& q = result.lanes[k];
        EdgeReach& cross = result.last_cross[s];
        // Rightmost: lane k is column k, step s is row s. Leftmost: transposed.
        const auto lane_target = rightmost ? grid.top(k, s) : grid.right(s, k);
        const auto cross_target = rightmost ? grid.right(k, s) : grid.top(s, k);
        EdgeReach next = right_edge_step(q, cross, cross_target);
        column_step(q, cross, lane_target);
        if (opts.check_invariants && q.size() > 2 * s + 1) {
            fail("deque of lane " + std::to_string(k) + " holds " + std::to_string(q.size()) +
                 " pieces after step " + std::to_string(s));
        }
        result.stats.max_lane_size = std::max(result.stats.max_lane_size, q.size());
        cross = next;
    };
    // Both orders are valid; walk along grid columns, which are contiguous in storage.
    if (rightmost) {
        for (std::size_t k = 1; k <= lanes; ++k) {
            for (std::size_t s = 1; s <= steps; ++s) {
                visit(k, s);
            }
        }
    } else {
        for (std::size_t s = 1; s <= steps; ++s) {
            for (std::size_t k = 1; k <= lanes; ++k) {
                visit(k, s);
            }
        }
    }

    for (std::size_t k = 1; k <= lanes; ++k) {
        result.stats.insertions += result.lanes[k].insertions();
    }
    if (opts.check_invariants) {
        if (result.stats.insertions > result.stats.insertion_bound()) {
            fail("pass inserted " + std::to_string(result.stats.insertions) + " pieces, bound is " +
                 std::to_string(result.stats.insertion_bound()));
        }
        for (std::size_t k = 1; k <= lanes; ++k) {
            if (!result.lanes[k].well_formed()) {
                fail("lane " + std::to_string(k) + " is not sorted and disjoint");
            }
            if (!values_monotone(result.lanes[k], cfg.side)) {
                fail("extremal values along lane " + std::to_string(k) + " are not monotone");
            }
        }
    }
    return result;
}

ReachProfile assemble_profile(const FreeSpaceGrid& grid, const ProfileOptions& opts)
{
    const std::size_t m = grid.m();
    const double width = static_cast<double>(2 * m);
    const bool check = opts.pass.check_invariants;

    ReachProfile profile;
    profile.m = m;
    profile.n = grid.n();

    const PassResult forward = run_pass(grid, {Side::rightmost, opts.forward_init}, opts.pass);
    profile.forward = forward.stats;
    profile.top.reserve(m);
    for (std::size_t i = m + 1; i <= 2 * m; ++i) {
        const auto& t = forward.lanes[i].triples();
        profile.top.emplace_back(t.begin(), t.end());
    }
    if (check) {
        // Along the top row the largest takeoff never decreases.
        double last = -1.0;
        for (std::size_t i = 1; i <= 2 * m; ++i) {
            for (const SpanTriple& t : forward.lanes[i].triples()) {
                if (t.value_at(t.beg) < last) {
                    fail("largest takeoff decreases along the top row at column " + std::to_string(i));
                }
                last = t.value_at(t.end);
            }
        }
    }

    // Points reachable from the top, seen through (u, v) -> (2m - u, n - v):
    // their largest top coordinate becomes the smallest takeoff there.
    const PassResult backward = run_pass(reflect_grid(grid), {Side::leftmost, Init::seeded}, opts.pass);
    profile.backward = backward.stats;
    profile.bottom.resize(m);
    double last = -1.0;
    for (std::size_t i = 1; i <= m; ++i) {
        const EdgeReach& e = backward.last_cross[2 * m - i + 1];
        if (!e.present()) {
            continue;
        }
        BottomEntry entry{width - e.interval->hi, width - e.interval->lo, width - e.value};
        if (check) {
            if (entry.r_up < entry.d) {
                fail("bottom edge " + std::to_string(i) + " reaches the top only left of itself");
            }
            if (entry.r_up < last) {
                fail("largest landing decreases along the bottom row at column " + std::to_string(i));
            }
            last = entry.r_up;
        }
        profile.bottom[i - 1] = entry;
    }
    return profile;
}

ReachProfile assemble_profile(const Curve& x, const Curve& y, double eps, const ProfileOptions& opts)
{
    return assemble_profile(build_free_space(x, y, eps), opts);
}

} // namespace cfrechet
