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

#ifndef CHANSTAT_FIT_HPP
#define CHANSTAT_FIT_HPP

#include "chanstat/distribution.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace chanstat
{
    struct FitOptions
    {
        std::optional<double> fixed_loc;      // pin loc (e.g. 0 for excess delays)
        double tolerance = 1e-8;              // relative spread of the mean negative log-likelihood
        std::size_t max_evaluations = 10000;  // per start
        std::uint64_t seed = 0;               // jitter of the randomized start
    };

    // Raised when a fit cannot be produced. Carries the best spec found, if any.
    class FitError : public std::runtime_error
    {
    public:
        FitError(const std::string &what, std::optional<DistributionSpec> best = std::nullopt)
            : std::runtime_error(what), best_(std::move(best)) {}

        const std::optional<DistributionSpec> &best() const { return best_; }

    private:
        std::optional<DistributionSpec> best_;
    };

    // Maximum-likelihood estimate of loc/scale/shapes.
    //
    // Normal and Exponential use their closed-form estimators. The other families are optimized
    // with a multi-start Nelder-Mead search over log-transformed parameters. A free loc is kept
    // below min(data) - eps with eps = 1e-9 * (max - min), since several likelihoods grow without
    // bound as loc approaches the smallest observation. With a fixed loc, observations equal to it
    // are excluded from the likelihood of the optimized families.
    DistributionSpec fit_mle(Family family, std::span<const double> data, const FitOptions &options = {});

} // namespace chanstat

#endif
