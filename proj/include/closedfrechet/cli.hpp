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
#ifndef CLOSEDFRECHET_CLI_HPP_INCLUDED
#define CLOSEDFRECHET_CLI_HPP_INCLUDED

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "closedfrechet/free_space.hpp"
#include "closedfrechet/geometry.hpp"
#include "closedfrechet/reach_pass.hpp"

namespace cfrechet::cli {

class CurveParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input repeats its first vertex at the end.
class DuplicateClosure : public CurveParseError {
public:
    using CurveParseError::CurveParseError;
};

/// JSON {"dim": k, "points": [[...], ...]} or one whitespace-separated point
/// per line. The closing vertex is implicit and must not be repeated.
Curve parse_curve(std::string_view text);
Curve load_curve(const std::filesystem::path& path);

struct BenchRecord {
    std::size_t m = 0;
    std::size_t n = 0;
    double wall_time = 0.0;       // seconds
    std::size_t deque_insertions = 0; // larger of the two passes
};

struct BenchConfig {
    std::vector<std::size_t> sizes{50, 100, 200, 400};
    std::size_t repeats = 3;
    std::uint64_t seed = 1;
    double eps = 0.15;
    std::size_t max_cells = 4'000'000;
};

/// Closed curve with m vertices on the unit circle, radially perturbed by a
/// few random low-frequency harmonics.
Curve perturbed_circle(std::size_t m, std::uint64_t seed);

/// Times decide() on two perturbed circles with m = n for each size.
/// Throws std::invalid_argument for sizes with m * n above max_cells.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Least-squares slope of log(wall_time) against log(m * n).
double loglog_slope(const std::vector<BenchRecord>& records);

/// SVG of the doubled free space: blocked area shaded, free cells light, and
/// the reachable top and bottom slices from the profile with their values.
std::string render_svg(const Curve& x, const Curve& y, double eps, double scale);

/// Entry point of the `frechet` tool. Exit codes: 0 yes/success, 1 no, 2 error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cfrechet::cli

#endif
