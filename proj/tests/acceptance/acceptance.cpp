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
// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "closedfrechet/cli.hpp"
#include "closedfrechet/decision.hpp"
#include "closedfrechet/oracle.hpp"

using namespace cfrechet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& what)
{
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

Curve square(double side, double dx, double dy)
{
    return Curve(2, {dx, dy, dx + side, dy, dx + side, dy + side, dx, dy + side});
}

Curve random_curve(std::mt19937_64& rng, std::size_t max_vertices)
{
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<double> f(2 * m);
    for (double& v : f) {
        v = coord(rng);
    }
    return Curve(2, std::move(f));
}

Curve rigid(const Curve& c, double angle, double dx, double dy)
{
    const double cs = std::cos(angle), sn = std::sin(angle);
    std::vector<double> f;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = c.vertex(i);
        f.push_back(cs * v[0] - sn * v[1] + dx);
        f.push_back(sn * v[0] + cs * v[1] + dy);
    }
    return Curve(2, std::move(f));
}

Curve relabeled(const Curve& c, std::size_t shift)
{
    std::vector<double> f;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = c.vertex(i + shift);
        f.insert(f.end(), v.begin(), v.end());
    }
    return Curve(2, std::move(f));
}

Curve subdivided(const Curve& c, std::size_t edge, double t)
{
    std::vector<double> f;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = c.vertex(i);
        f.insert(f.end(), v.begin(), v.end());
        if (i == edge) {
            const auto w = c.vertex(i + 1);
            f.push_back((1 - t) * v[0] + t * w[0]);
            f.push_back((1 - t) * v[1] + t * w[1]);
        }
    }
    return Curve(2, std::move(f));
}

// Structural checks shared by every suite. Invariant violations inside the
// passes throw; the remaining bounds are checked here.
struct Structure {
    std::size_t profiles = 0;
    std::size_t violations = 0;
    std::size_t backward_over_forward_bound = 0;
    std::string first;

    void fail(const std::string& what)
    {
        if (violations++ == 0) {
            first = what;
        }
    }

    DecisionReport decide_checked(const Curve& x, const Curve& y, double eps)
    {
        ++profiles;
        try {
            const FreeSpaceGrid grid = build_free_space(x, y, eps);
            const ReachProfile p = assemble_profile(grid);
            const std::size_t m = x.size(), n = y.size();
            if (p.forward.insertions > 2 * (2 * m) * n + 2 * m) {
                fail("forward insertions above 2(2m)n + 2m");
            }
            if (p.backward.insertions > p.backward.insertion_bound()) {
                fail("backward insertions above 2(2m)n + n");
            }
            if (p.backward.insertions > 2 * (2 * m) * n + 2 * m) {
                ++backward_over_forward_bound;
            }
            const PassResult back = run_pass(reflect_grid(grid), {Side::leftmost, Init::seeded});
            for (const auto& lane : back.lanes) {
                for (const auto& t : lane.triples()) {
                    if (t.identity) {
                        fail("backward pass produced a non-constant piece");
                    }
                }
            }
            const DecisionReport r = decide_from_profile(p);
            if (r.answer && !witness_holds(p, *r.witness)) {
                fail("witness does not satisfy the inequality");
            }
            return r;
        } catch (const InvariantViolation& e) {
            fail(e.what());
            return decide(x, y, eps, DecideOptions{0.0, false, ProfileOptions{Init::identity, PassOptions{false}}});
        }
    }
};

Structure structure;

void criterion1()
{
    const auto t0 = Clock::now();
    int bad = 0;
    double worst = 0.0;
    const Curve base = square(1.0, 0.0, 0.0);
    for (int k = 1; k <= 9; ++k) {
        const double s = 0.1 * k;
        const Curve moved = square(1.0, s, 0.0);
        if (structure.decide_checked(base, moved, s - 0.01).answer) {
            ++bad;
        }
        if (!structure.decide_checked(base, moved, s + 0.01).answer) {
            ++bad;
        }
        const double d = compute_distance(base, moved, 1e-6);
        worst = std::max(worst, std::abs(d - s));
    }
    const double root2 = compute_distance(square(2.0, -1.0, -1.0), Curve(2, {0.0, 0.0}), 1e-6);
    const double err2 = std::abs(root2 - std::sqrt(2.0));
    const double elapsed = seconds_since(t0);
    const bool ok = bad == 0 && worst <= 1e-6 && err2 <= 1e-6 && elapsed < 5.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "analytic squares: %d wrong verdicts, max |D - s| = %.2e, |D - sqrt2| = %.2e, %.3f s", bad, worst,
                  err2, elapsed);
    report(1, ok, buf);
}

struct Instance {
    Curve x;
    Curve y;
    double eps;
};

void criteria2and3(std::mt19937_64& rng)
{
    const auto t0 = Clock::now();
    const int count = 500;
    int decisive = 0, inconclusive = 0, disagree = 0, sampled_true = 0, one_sided_bad = 0;
    for (int it = 0; it < count; ++it) {
        const Curve x = random_curve(rng, 12), y = random_curve(rng, 12);
        const oracle::Bracket b = oracle::cyclic_discrete_frechet_bracket(x, y, 0.02);
        const double eps = std::uniform_real_distribution<double>(std::max(0.0, b.lo - 0.1), b.hi + 0.1)(rng);
        const bool got = structure.decide_checked(x, y, eps).answer;
        if (b.contains(eps)) {
            ++inconclusive;
        } else {
            ++decisive;
            if (got != (eps > b.hi)) {
                ++disagree;
            }
        }
        if (oracle::sampled_shift_decide(x, y, eps, 32)) {
            ++sampled_true;
            if (!got) {
                ++one_sided_bad;
            }
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "bracket oracle (h = 0.02) on %d pairs: %d decisive, %d disagreements, %d inconclusive (%.1f s)",
                  count, decisive, disagree, inconclusive, seconds_since(t0));
    report(2, disagree == 0, buf);
    std::snprintf(buf, sizeof buf, "sampled shifts (K = 32): %d certified yes, %d answered no by decide", sampled_true,
                  one_sided_bad);
    report(3, one_sided_bad == 0, buf);
}

void criterion4(std::mt19937_64& rng)
{
    const auto t0 = Clock::now();
    const int count = 200;
    const int grid = 20;
    int mono = 0, sym = 0, motion = 0, relabel = 0, subdiv = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int it = 0; it < count; ++it) {
        const Curve x = random_curve(rng, 12), y = random_curve(rng, 12);
        const double angle = 2 * M_PI * unit(rng), dx = unit(rng) * 4 - 2, dy = unit(rng) * 4 - 2;
        const Curve xm = rigid(x, angle, dx, dy), ym = rigid(y, angle, dx, dy);
        const std::size_t sx = std::uniform_int_distribution<std::size_t>(0, x.size() - 1)(rng);
        const std::size_t sy = std::uniform_int_distribution<std::size_t>(0, y.size() - 1)(rng);
        const Curve xr = relabeled(x, sx), yr = relabeled(y, sy);
        const double t = 0.1 + 0.8 * unit(rng);
        const Curve xs = subdivided(x, sx, t), ys = subdivided(y, sy, t);
        const double top = max_vertex_pair_distance(x, y);
        bool previous = false;
        bool m_ok = true, s_ok = true, g_ok = true, r_ok = true, d_ok = true;
        for (int k = 0; k < grid; ++k) {
            const double eps = top * (k + 0.5) / grid;
            const bool a = structure.decide_checked(x, y, eps).answer;
            m_ok &= !previous || a;
            previous = a;
            s_ok &= a == structure.decide_checked(y, x, eps).answer;
            g_ok &= a == structure.decide_checked(xm, ym, eps).answer;
            r_ok &= a == structure.decide_checked(xr, y, eps).answer;
            r_ok &= a == structure.decide_checked(x, yr, eps).answer;
            d_ok &= a == structure.decide_checked(xs, y, eps).answer;
            d_ok &= a == structure.decide_checked(x, ys, eps).answer;
        }
        mono += !m_ok;
        sym += !s_ok;
        motion += !g_ok;
        relabel += !r_ok;
        subdiv += !d_ok;
    }
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "metric properties on %d pairs x %d eps: failing pairs monotonicity %d, symmetry %d, rigid motion "
                  "%d, relabeling %d, subdivision %d (%.1f s)",
                  count, grid, mono, sym, motion, relabel, subdiv, seconds_since(t0));
    report(4, mono + sym + motion + relabel + subdiv == 0, buf);
}

void criterion5(std::mt19937_64& rng)
{
    const int count = 200;
    int differ = 0;
    DecideOptions seeded;
    seeded.profile.forward_init = Init::seeded;
    for (int it = 0; it < count; ++it) {
        const Curve x = random_curve(rng, 12), y = random_curve(rng, 12);
        const oracle::Bracket b = oracle::cyclic_discrete_frechet_bracket(x, y, 0.05);
        // Concentrate eps near the distance, where the two seedings could part.
        const double eps = std::uniform_real_distribution<double>(std::max(0.0, b.lo - 0.02), b.hi + 0.02)(rng);
        const bool a = structure.decide_checked(x, y, eps).answer;
        try {
            differ += a != decide(x, y, eps, seeded).answer;
        } catch (const InvariantViolation& e) {
            structure.fail(e.what());
        }
    }
    char buf[400];
    std::snprintf(buf, sizeof buf,
                  "structural invariants over %zu profiles: %zu violations%s%s; identity vs seeded init differ on "
                  "%d of %d; backward passes above 2(2m)n + 2m: %zu",
                  structure.profiles, structure.violations, structure.violations ? ", first: " : "",
                  structure.first.c_str(), differ, count, structure.backward_over_forward_bound);
    report(5, structure.violations == 0 && differ == 0, buf);
}

void criterion6()
{
    const auto t0 = Clock::now();
    cli::BenchConfig cfg;
    cfg.sizes = {50, 100, 200, 400, 800};
    cfg.repeats = 3;
    cfg.seed = 2026;
    const auto records = cli::run_bench(cfg);
    const double slope = cli::loglog_slope(records);
    const double elapsed = seconds_since(t0);
    bool bound_ok = true;
    for (const auto& r : records) {
        bound_ok &= r.deque_insertions <= 2 * (2 * r.m) * r.n + 2 * r.m;
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "bench m = n in {50..800} x 3: log-log slope %.3f (limit 1.15), %.2f s total",
                  slope, elapsed);
    report(6, slope <= 1.15 && elapsed < 60.0 && bound_ok, buf);
}

void criterion7()
{
    const Curve s = square(1.0, 0.0, 0.0);
    const ReachProfile p = assemble_profile(s, s, 0.0);
    const DecisionReport r = decide_from_profile(p);
    const bool ok = p.bottom_at(1) == BottomEntry{0, 0, 4} &&
                    p.top_at(5) == std::vector{SpanTriple::constant(4, 0, 4)} &&
                    p.top_at(8) == std::vector{SpanTriple::constant(8, 4, 8)} && r.answer && r.witness &&
                    r.witness->bottom == 1 && r.witness->u == 0.0;
    report(7, ok, "unit square at eps = 0: bottom (0, 0, 4) on edge 1, pieces (4, 0, 4) and (8, 4, 8), yes at u = 0");
}

} // namespace

int main()
{
    std::mt19937_64 rng(20261016);
    criterion1();
    criteria2and3(rng);
    criterion4(rng);
    criterion5(rng);
    criterion6();
    criterion7();
    return failures == 0 ? 0 : 1;
}
