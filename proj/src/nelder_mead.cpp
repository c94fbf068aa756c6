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

#include "chanstat/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace chanstat
{
    NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                                 std::vector<double> x0,
                                 const NelderMeadOptions &options)
    {
        if (x0.empty())
            throw std::invalid_argument("nelder_mead: empty starting point.");
        if (!(options.tolerance > 0.0))
            throw std::invalid_argument("nelder_mead: tolerance must be > 0.");

        constexpr double reflect = 1.0;
        constexpr double expand = 2.0;
        constexpr double contract = 0.5;
        constexpr double shrink = 0.5;

        const std::size_t dim = x0.size();
        NelderMeadResult result;

        auto eval = [&](const std::vector<double> &x)
        {
            ++result.evaluations;
            const double v = f(x);
            return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
        };

        std::vector<std::vector<double>> simplex(dim + 1, x0);
        for (std::size_t i = 0; i < dim; ++i)
            simplex[i + 1][i] += options.initial_step;
        std::vector<double> values(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i)
            values[i] = eval(simplex[i]);

        std::vector<std::size_t> order(dim + 1);
        std::vector<double> centroid(dim), trial(dim), second(dim);

        while (true)
        {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                             { return values[a] < values[b]; });
            const std::size_t best = order.front();
            const std::size_t worst = order.back();
            const std::size_t next_worst = order[dim - 1];

            const double spread = values[worst] - values[best];
            if (std::isfinite(values[worst]) && spread <= options.tolerance * (1.0 + std::abs(values[best])))
            {
                result.converged = true;
                break;
            }
            if (result.evaluations >= options.max_evaluations)
                break;

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i <= dim; ++i)
                if (i != worst)
                    for (std::size_t k = 0; k < dim; ++k)
                        centroid[k] += simplex[i][k];
            for (auto &c : centroid)
                c /= static_cast<double>(dim);

            for (std::size_t k = 0; k < dim; ++k)
                trial[k] = centroid[k] + reflect * (centroid[k] - simplex[worst][k]);
            const double f_reflect = eval(trial);

            if (f_reflect < values[best])
            {
                for (std::size_t k = 0; k < dim; ++k)
                    second[k] = centroid[k] + expand * (trial[k] - centroid[k]);
                const double f_expand = eval(second);
                if (f_expand < f_reflect)
                {
                    simplex[worst] = second;
                    values[worst] = f_expand;
                }
                else
                {
                    simplex[worst] = trial;
                    values[worst] = f_reflect;
                }
                continue;
            }
            if (f_reflect < values[next_worst])
            {
                simplex[worst] = trial;
                values[worst] = f_reflect;
                continue;
            }

            // Contraction: outside if the reflected point improved on the worst, inside otherwise
            const bool outside = f_reflect < values[worst];
            const auto &toward = outside ? trial : simplex[worst];
            for (std::size_t k = 0; k < dim; ++k)
                second[k] = centroid[k] + contract * (toward[k] - centroid[k]);
            const double f_contract = eval(second);
            if (f_contract < std::min(f_reflect, values[worst]))
            {
                simplex[worst] = second;
                values[worst] = f_contract;
                continue;
            }

            for (std::size_t i = 0; i <= dim; ++i)
            {
                if (i == best)
                    continue;
                for (std::size_t k = 0; k < dim; ++k)
                    simplex[i][k] = simplex[best][k] + shrink * (simplex[i][k] - simplex[best][k]);
                values[i] = eval(simplex[i]);
            }
        }

        const auto best_it = std::min_element(values.begin(), values.end());
        const auto best_index = static_cast<std::size_t>(std::distance(values.begin(), best_it));
        result.x = simplex[best_index];
        result.value = *best_it;
        return result;
    }

} // namespace chanstat
