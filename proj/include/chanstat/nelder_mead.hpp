// SPDX-License-Identifier: Apache-2.0
//
// chanstat: statistics and synthesis of multipath channel measurements
// Copyright (C) 2026 The chanstat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANSTAT_NELDER_MEAD_HPP
#define CHANSTAT_NELDER_MEAD_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace chanstat
{
    struct NelderMeadOptions
    {
        double tolerance = 1e-8;          // relative spread of objective values across the simplex
        std::size_t max_evaluations = 10000;
        double initial_step = 0.25;       // edge length of the starting simplex along each axis
    };

    struct NelderMeadResult
    {
        std::vector<double> x;
        double value = 0.0;
        std::size_t evaluations = 0;
        bool converged = false;
    };

    // Minimizes f from x0. Non-finite objective values are treated as +inf, so infeasible points
    // are simply never accepted. Convergence: |f_worst - f_best| <= tolerance * (1 + |f_best|).
    NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                                 std::vector<double> x0,
                                 const NelderMeadOptions &options = {});

} // namespace chanstat

#endif
