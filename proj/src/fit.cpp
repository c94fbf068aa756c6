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

#include "chanstat/fit.hpp"
#include "chanstat/nelder_mead.hpp"
#include "chanstat/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

namespace chanstat
{
    namespace
    {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        constexpr double kEulerGamma = 0.57721566490153286;
        constexpr double kMinShape = 1e-3;

        struct Moments
        {
            double mean = 0.0;
            double var = 0.0;
            double m2 = 0.0;      // E[z^2]
            double m4 = 0.0;      // E[z^4]
            double log_mean = 0.0;
            double log_sd = 0.0;
            double log_median = 0.0;
        };

        // Moments of z = x - loc (z > 0 assumed for the log moments; zeros are skipped there)
        Moments shifted_moments(std::span<const double> sorted, double loc)
        {
            Moments m;
            const double n = static_cast<double>(sorted.size());
            std::vector<double> logs;
            logs.reserve(sorted.size());
            for (double x : sorted)
            {
                const double z = x - loc;
                m.mean += z;
                m.m2 += z * z;
                m.m4 += z * z * z * z;
                if (z > 0.0)
                    logs.push_back(std::log(z));
            }
            m.mean /= n;
            m.m2 /= n;
            m.m4 /= n;
            m.var = std::max(m.m2 - m.mean * m.mean, 0.0);
            if (!logs.empty())
            {
                const double ln = static_cast<double>(logs.size());
                m.log_mean = std::accumulate(logs.begin(), logs.end(), 0.0) / ln;
                double ss = 0.0;
                for (double l : logs)
                    ss += (l - m.log_mean) * (l - m.log_mean);
                m.log_sd = std::sqrt(ss / ln);
                m.log_median = logs[logs.size() / 2]; // sorted input keeps logs sorted
            }
            return m;
        }

        double clamp_shape(double v, double fallback = 1.0)
        {
            if (!std::isfinite(v) || v <= 0.0)
                return fallback;
            return std::clamp(v, kMinShape, 1e6);
        }

        // Parameter vector <-> spec mapping. Coordinates are logs of positive quantities scaled by
        // the data spread, so the search is equivariant under affine maps of the data.
        class Parameterization
        {
        public:
            Parameterization(Family family, std::span<const double> sorted, std::optional<double> fixed_loc)
                : family_(family), fixed_loc_(fixed_loc)
            {
                const double lo = sorted.front();
                const double hi = sorted.back();
                const double eps = 1e-9 * (hi - lo);
                anchor_lo_ = lo - eps;
                anchor_hi_ = hi + eps;
                const double n = static_cast<double>(sorted.size());
                const double m = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
                double ss = 0.0;
                for (double x : sorted)
                    ss += (x - m) * (x - m);
                span_ = std::sqrt(ss / n);
            }

            std::size_t dimension() const
            {
                return (fixed_loc_ ? 0 : 1) + 1 + shape_arity(family_);
            }

            // Returns loc, scale, shapes; scale <= 0 signals an unusable point
            void decode(const std::vector<double> &theta, double &loc, double &scale, std::vector<double> &shapes) const
            {
                std::size_t i = 0;
                loc = fixed_loc_ ? *fixed_loc_ : anchor_lo_ - span_ * std::exp(theta[i++]);
                if (family_ == Family::Beta)
                {
                    const double upper = anchor_hi_ + span_ * std::exp(theta[i++]);
                    scale = upper - loc;
                }
                else
                    scale = span_ * std::exp(theta[i++]);
                shapes.resize(shape_arity(family_));
                for (auto &s : shapes)
                    s = std::exp(theta[i++]);
            }

            std::vector<double> encode(double loc, double scale, const std::vector<double> &shapes) const
            {
                std::vector<double> theta;
                if (!fixed_loc_)
                    theta.push_back(std::log(std::max(anchor_lo_ - loc, 1e-300) / span_));
                if (family_ == Family::Beta)
                    theta.push_back(std::log(std::max(loc + scale - anchor_hi_, 1e-300) / span_));
                else
                    theta.push_back(std::log(scale / span_));
                for (double s : shapes)
                    theta.push_back(std::log(s));
                return theta;
            }

            double anchor_lo() const { return anchor_lo_; }
            double anchor_hi() const { return anchor_hi_; }
            double span() const { return span_; }

        private:
            Family family_;
            std::optional<double> fixed_loc_;
            double anchor_lo_ = 0.0;
            double anchor_hi_ = 0.0;
            double span_ = 1.0;
        };

        struct Start
        {
            double loc;
            double scale;
            std::vector<double> shapes;
        };

        // Method-of-moments scale/shapes for data shifted by loc (and bounded by upper for Beta)
        Start moment_start(Family family, std::span<const double> sorted, double loc, double upper)
        {
            const Moments m = shifted_moments(sorted, loc);
            const double sd = std::sqrt(m.var);
            switch (family)
            {
            case Family::LogNormal:
                return {loc, std::exp(m.log_mean), {clamp_shape(m.log_sd, 0.5)}};
            case Family::Rayleigh:
                return {loc, std::sqrt(0.5 * m.m2), {}};
            case Family::Rician:
            {
                // E z^4 / (E z^2)^2 = (b^4 + 8 b^2 + 8) / (b^2 + 2)^2, solved for b^2
                const double r = m.m4 / (m.m2 * m.m2);
                double t = 0.0;
                if (r < 2.0 && r > 1.0)
                    t = ((8.0 - 4.0 * r) + std::sqrt(32.0 - 16.0 * r)) / (2.0 * (r - 1.0));
                const double b = std::max(std::sqrt(t), 0.05);
                return {loc, std::sqrt(m.m2 / (2.0 + b * b)), {b}};
            }
            case Family::Nakagami:
            {
                const double nu = m.m2 * m.m2 / std::max(m.m4 - m.m2 * m.m2, 1e-300);
                return {loc, std::sqrt(m.m2), {clamp_shape(nu)}};
            }
            case Family::Gamma:
                return {loc, std::max(m.var / m.mean, 1e-12 * sd), {clamp_shape(m.mean * m.mean / m.var)}};
            case Family::Beta:
            {
                const double width = upper - loc;
                const double w_mean = m.mean / width;
                const double w_var = m.var / (width * width);
                const double common = w_mean * (1.0 - w_mean) / w_var - 1.0;
                return {loc, width, {clamp_shape(w_mean * common), clamp_shape((1.0 - w_mean) * common)}};
            }
            case Family::LogLogistic:
            {
                const double c = clamp_shape(std::numbers::pi / (std::sqrt(3.0) * m.log_sd), 2.0);
                return {loc, std::exp(m.log_median), {c}};
            }
            case Family::Weibull:
            {
                const double c = clamp_shape(std::numbers::pi / (std::sqrt(6.0) * m.log_sd));
                return {loc, std::exp(m.log_mean + kEulerGamma / c), {c}};
            }
            case Family::Exponential:
                return {loc, m.mean, {}};
            case Family::Normal:
                return {m.mean + loc, sd, {}};
            }
            return {loc, sd, {}};
        }

        DistributionSpec fit_normal(std::span<const double> data, const FitOptions &options)
        {
            const double n = static_cast<double>(data.size());
            const double loc = options.fixed_loc ? *options.fixed_loc
                                                 : std::accumulate(data.begin(), data.end(), 0.0) / n;
            double ss = 0.0;
            for (double x : data)
                ss += (x - loc) * (x - loc);
            const double scale = std::sqrt(ss / n);
            if (!(scale > 0.0))
                throw FitError("normal: data have zero spread.");
            return DistributionSpec(Family::Normal, loc, scale);
        }

        DistributionSpec fit_exponential(std::span<const double> sorted, const FitOptions &options)
        {
            const double n = static_cast<double>(sorted.size());
            const double loc = options.fixed_loc ? *options.fixed_loc : sorted.front();
            if (sorted.front() < loc)
                throw FitError("exponential: data lie below the fixed loc.");
            const double scale = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n - loc;
            if (!(scale > 0.0))
                throw FitError("exponential: data have zero spread above loc.");
            return DistributionSpec(Family::Exponential, loc, scale);
        }
    } // namespace

    DistributionSpec fit_mle(Family family, std::span<const double> data, const FitOptions &options)
    {
        const std::string name(family_name(family));
        if (!(options.tolerance > 0.0))
            throw std::invalid_argument("fit_mle: tolerance must be > 0.");
        if (data.size() < 3 + shape_arity(family))
            throw FitError(name + ": need at least " + std::to_string(3 + shape_arity(family)) +
                           " points, got " + std::to_string(data.size()) + ".");
        for (double x : data)
            if (!std::isfinite(x))
                throw FitError(name + ": data contain non-finite values.");
        if (options.fixed_loc && !std::isfinite(*options.fixed_loc))
            throw FitError(name + ": fixed loc must be finite.");

        std::vector<double> sorted(data.begin(), data.end());
        std::sort(sorted.begin(), sorted.end());

        if (family == Family::Normal)
            return fit_normal(data, options);
        if (family == Family::Exponential)
            return fit_exponential(sorted, options);

        if (!(sorted.back() > sorted.front()))
            throw FitError(name + ": data have zero spread.");
        if (options.fixed_loc && sorted.front() < *options.fixed_loc)
            throw FitError(name + ": data lie below the fixed loc.");

        // With a pinned loc, points on the support edge carry a density of 0 or infinity for almost
        // every shape; they are left out of the likelihood (goodness of fit still sees them).
        if (options.fixed_loc)
        {
            const auto first = std::upper_bound(sorted.begin(), sorted.end(), *options.fixed_loc);
            sorted.erase(sorted.begin(), first);
            if (sorted.size() < 3 + shape_arity(family))
                throw FitError(name + ": need at least " + std::to_string(3 + shape_arity(family)) +
                               " points above the fixed loc, got " + std::to_string(sorted.size()) + ".");
            if (!(sorted.back() > sorted.front()))
                throw FitError(name + ": data have zero spread above the fixed loc.");
        }

        const Parameterization param(family, sorted, options.fixed_loc);
        const double inv_n = 1.0 / static_cast<double>(sorted.size());

        std::vector<double> shapes_buf;
        const auto objective = [&](const std::vector<double> &theta)
        {
            double loc, scale;
            param.decode(theta, loc, scale, shapes_buf);
            if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(loc))
                return kInf;
            for (double s : shapes_buf)
                if (!(s > 0.0) || !std::isfinite(s))
                    return kInf;
            const DistributionSpec spec(family, loc, scale, shapes_buf);
            return -log_likelihood(spec, sorted) * inv_n;
        };

        // Starting points: loc offsets from the moments (multiples of the standard deviation) and
        // from the lower quantiles, each completed by method-of-moments scale and shapes.
        std::vector<Start> starts;
        const double upper_gap_unit = param.span();
        if (options.fixed_loc)
        {
            const Start base = moment_start(family, sorted, *options.fixed_loc, param.anchor_hi() + 0.05 * upper_gap_unit);
            starts.push_back(base);
            for (double f : {0.5, 2.0})
            {
                Start s = base;
                s.scale *= f;
                starts.push_back(s);
                if (!base.shapes.empty())
                {
                    Start t = base;
                    for (auto &v : t.shapes)
                        v = clamp_shape(v * f);
                    starts.push_back(t);
                }
                else
                {
                    Start t = base;
                    t.scale *= f * f;
                    starts.push_back(t);
                }
            }
        }
        else
        {
            const double lo = param.anchor_lo();
            const double sd = param.span();
            std::vector<double> offsets = {1e-3 * sd, 0.05 * sd, 0.25 * sd, sd, 3.0 * sd};
            const double q10 = sorted[sorted.size() / 10];
            const double q_gap = std::max(q10 - sorted.front(), 1e-6 * sd);
            offsets.push_back(0.1 * q_gap);
            offsets.push_back(q_gap);
            for (double off : offsets)
                starts.push_back(moment_start(family, sorted, lo - off, param.anchor_hi() + off));
        }

        // One randomized start around the first moment start, reproducible through the seed
        {
            Rng rng(options.seed);
            Start s = starts.front();
            s.scale *= std::exp(rng.uniform() - 0.5);
            for (auto &v : s.shapes)
                v = clamp_shape(v * std::exp(rng.uniform() - 0.5));
            starts.push_back(s);
        }

        NelderMeadOptions nm;
        nm.tolerance = options.tolerance;
        nm.max_evaluations = options.max_evaluations;

        std::optional<NelderMeadResult> best;
        bool any_converged = false;
        for (const Start &start : starts)
        {
            if (!(start.scale > 0.0) || !std::isfinite(start.scale))
                continue;
            std::vector<double> theta = param.encode(start.loc, start.scale, start.shapes);
            if (std::any_of(theta.begin(), theta.end(), [](double v)
                            { return !std::isfinite(v); }))
                continue;

            nm.initial_step = 0.25;
            NelderMeadResult r = nelder_mead(objective, theta, nm);
            if (!std::isfinite(r.value))
                continue;
            // Restart from the optimum with a fresh, smaller simplex to escape premature collapse
            nm.initial_step = 0.05;
            NelderMeadResult polished = nelder_mead(objective, r.x, nm);
            if (polished.value <= r.value)
            {
                polished.converged = polished.converged && r.converged;
                r = polished;
            }
            any_converged = any_converged || r.converged;
            if (!best || r.value < best->value)
                best = r;
        }

        if (!best)
            throw FitError(name + ": no feasible starting point.");

        double loc, scale;
        std::vector<double> shapes;
        param.decode(best->x, loc, scale, shapes);
        DistributionSpec spec(family, loc, scale, shapes);
        if (!any_converged)
            throw FitError(name + ": optimizer did not converge within " + std::to_string(options.max_evaluations) +
                               " evaluations per start.",
                           spec);
        return spec;
    }

} // namespace chanstat
