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

#include "catch_amalgamated.hpp"
#include "chanstat/distribution.hpp"
#include "chanstat/gof.hpp"
#include "support.hpp"

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/rayleigh.hpp>
#include <boost/math/distributions/weibull.hpp>

#include <cmath>
#include <limits>
#include <numeric>

// Covered tests:
// - Construction, validation and family names
// - Closed-form values of pdf / cdf / log-likelihood / mean
// - Reduction identities between families
// - Unit mass of every density, cdf monotonicity, quantile round trips
// - Cross-check against Boost.Math distributions
// - Inversion sampling: determinism, support, KS consistency, moments

using namespace chanstat;
using test::parameter_points;

TEST_CASE("Distribution - construction and names")
{
    CHECK(all_families.size() == 10);
    for (Family f : all_families)
        CHECK(parse_family(family_name(f)) == f);
    CHECK(parse_family("Log-Normal") == Family::LogNormal);
    CHECK(parse_family("log logistic") == Family::LogLogistic);
    CHECK(parse_family("FISK") == Family::LogLogistic);
    CHECK(parse_family("rice") == Family::Rician);
    CHECK_THROWS_AS(parse_family("cauchy"), std::invalid_argument);

    CHECK(shape_arity(Family::Normal) == 0);
    CHECK(shape_arity(Family::Beta) == 2);
    CHECK(shape_arity(Family::Weibull) == 1);

    CHECK_THROWS_AS(DistributionSpec(Family::Normal, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec(Family::Normal, 0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec(Family::Normal, NAN, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec(Family::LogNormal, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec(Family::Normal, 0.0, 1.0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec(Family::Rician, 0.0, 1.0, {-0.1}), std::invalid_argument);
    CHECK_NOTHROW(DistributionSpec(Family::Rician, 0.0, 1.0, {0.0}));
    CHECK_THROWS_AS(DistributionSpec(Family::Gamma, 0.0, 1.0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec(Family::Beta, 0.0, 1.0, {1.0, 0.0}), std::invalid_argument);

    const DistributionSpec beta(Family::Beta, -40.0, 30.0, {2.5, 1.8});
    CHECK(beta.support_lower() == -40.0);
    CHECK(beta.support_upper() == -10.0);
    CHECK(DistributionSpec(Family::Normal, 0, 1).support_lower() == -INFINITY);
    CHECK(DistributionSpec(Family::Weibull, 2, 1, {2}).support_upper() == INFINITY);
}

TEST_CASE("Distribution - closed-form examples")
{
    const DistributionSpec e1(Family::Exponential, 0.0, 43.51);
    CHECK(pdf(e1, 0.0) == Catch::Approx(0.022983).margin(5e-7));
    CHECK(pdf(e1, 0.0) == Catch::Approx(1.0 / 43.51).epsilon(1e-14));
    CHECK(pdf(e1, -1e-9) == 0.0);

    const DistributionSpec e2(Family::Exponential, 0.0, 50.52);
    CHECK(cdf(e2, 50.52) == Catch::Approx(0.63212).margin(5e-6));
    CHECK(cdf(e2, 50.52) == Catch::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(quantile(e2, 1.0 - std::exp(-1.0)) == Catch::Approx(50.52).epsilon(1e-12));
    CHECK(*mean(e2) == Catch::Approx(50.52).epsilon(1e-15));

    const DistributionSpec n(Family::Normal, 3.25, 2.0);
    CHECK(quantile(n, 0.5) == Catch::Approx(3.25).epsilon(1e-15));
    CHECK(*mean(n) == 3.25);

    const double x0[] = {0.0};
    CHECK(log_likelihood(DistributionSpec(Family::Normal, 0, 1), x0) == Catch::Approx(-0.91894).margin(5e-6));
    CHECK(log_likelihood(DistributionSpec(Family::Normal, 0, 1), x0) == Catch::Approx(-0.5 * std::log(2.0 * M_PI)).epsilon(1e-15));
    const double x00[] = {0.0, 0.0};
    CHECK(log_likelihood(DistributionSpec(Family::Normal, 0, 1), x00) == Catch::Approx(-std::log(2.0 * M_PI)).epsilon(1e-15));
    const double below[] = {1.0, -0.5};
    CHECK(log_likelihood(e1, below) == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(log_likelihood(e1, std::span<const double>{}), std::invalid_argument);

    // Bounded-support families start at zero mass at loc
    for (const auto &spec : parameter_points())
        if (spec.family() != Family::Normal)
            CHECK(cdf(spec, spec.loc()) == 0.0);

    const DistributionSpec ll(Family::LogLogistic, -33.79, 15.5, {4.04});
    CHECK(cdf(ll, -33.79 + 15.5) == Catch::Approx(0.5).epsilon(1e-14));

    const DistributionSpec lognormal(Family::LogNormal, -35.5, 17.4, {0.37});
    CHECK(*mean(lognormal) == Catch::Approx(-35.5 + 17.4 * std::exp(0.37 * 0.37 / 2.0)).epsilon(1e-14));
    CHECK(*mean(lognormal) == Catch::Approx(-16.87).margin(0.01));
    CHECK_FALSE(mean(DistributionSpec(Family::LogLogistic, -29.0, 5.6, {0.84})).has_value());
    CHECK_FALSE(mean(DistributionSpec(Family::LogLogistic, 0.0, 1.0, {1.0})).has_value());
    CHECK(*mean(DistributionSpec(Family::LogLogistic, 0.0, 1.0, {2.0})) == Catch::Approx(M_PI / 2.0).epsilon(1e-14));

    CHECK_THROWS_AS(quantile(e1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quantile(e1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(quantile(e1, NAN), std::invalid_argument);
}

TEST_CASE("Distribution - reduction identities")
{
    auto same = [](const DistributionSpec &a, const DistributionSpec &b, double x0, double x1)
    {
        for (int i = 0; i < 100; ++i)
        {
            const double x = x0 + (x1 - x0) * i / 99.0;
            INFO(family_name(a.family()) << " vs " << family_name(b.family()) << " at x = " << x);
            CHECK(std::abs(pdf(a, x) - pdf(b, x)) <= 1e-12 * std::max(1.0, pdf(b, x)));
            CHECK(std::abs(cdf(a, x) - cdf(b, x)) <= 1e-12);
        }
    };
    same({Family::Rician, -3.0, 2.0, {0.0}}, {Family::Rayleigh, -3.0, 2.0}, -4.0, 15.0);
    same({Family::Gamma, 1.0, 3.0, {1.0}}, {Family::Exponential, 1.0, 3.0}, 0.0, 30.0);
    same({Family::Weibull, 0.0, 50.52, {1.0}}, {Family::Exponential, 0.0, 50.52}, -1.0, 400.0);
    same({Family::Nakagami, 0.5, 4.0, {1.0}}, {Family::Rayleigh, 0.5, 4.0 / std::sqrt(2.0)}, 0.0, 15.0);
}

TEST_CASE("Distribution - unit mass and cdf shape")
{
    for (const auto &spec : parameter_points())
    {
        INFO(family_name(spec.family()) << " loc " << spec.loc() << " scale " << spec.scale());
        CHECK(std::abs(test::total_mass(spec) - 1.0) < 1e-6);

        // Nondecreasing on a 1000-point grid spanning the bulk
        const double lo = quantile(spec, 1e-6), hi = quantile(spec, 1.0 - 1e-6);
        double prev = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const double c = cdf(spec, lo + (hi - lo) * i / 999.0);
            CHECK(c >= prev);
            CHECK(c <= 1.0);
            prev = c;
        }
        CHECK(std::abs(cdf(spec, spec.support_upper()) - 1.0) < 1e-9);
        CHECK(cdf(spec, -INFINITY) == 0.0);
    }
}

TEST_CASE("Distribution - quantile round trip")
{
    Rng rng(20260101);
    const auto specs = parameter_points();
    for (int i = 0; i < 1000; ++i)
    {
        const auto &spec = specs[rng.index(specs.size())];
        const double q = rng.uniform();
        INFO(family_name(spec.family()) << " q = " << q);
        CHECK(std::abs(cdf(spec, quantile(spec, q)) - q) < 1e-9);
    }
    for (const auto &spec : specs)
        for (double q : {1e-12, 1e-6, 0.01, 0.5, 0.99, 1.0 - 1e-6, 1.0 - 1e-12})
        {
            INFO(family_name(spec.family()) << " q = " << q);
            CHECK(std::abs(cdf(spec, quantile(spec, q)) - q) < 1e-9);
        }
}

TEST_CASE("Distribution - agreement with Boost.Math")
{
    const boost::math::gamma_distribution<> g(3.66, 3.73);
    const boost::math::lognormal_distribution<> ln(0.0, 0.37);
    const boost::math::rayleigh_distribution<> r(10.3);
    const boost::math::weibull_distribution<> w(0.6, 50.0);
    for (double x : {0.01, 0.5, 2.0, 9.0, 17.0, 40.0, 120.0})
    {
        INFO("x = " << x);
        CHECK(pdf(DistributionSpec(Family::Gamma, -30.7, 3.73, {3.66}), x - 30.7) == Catch::Approx(boost::math::pdf(g, x)).epsilon(1e-12));
        CHECK(cdf(DistributionSpec(Family::Gamma, -30.7, 3.73, {3.66}), x - 30.7) == Catch::Approx(boost::math::cdf(g, x)).epsilon(1e-12));
        CHECK(cdf(DistributionSpec(Family::LogNormal, 0.0, 17.4, {0.37}), x) == Catch::Approx(boost::math::cdf(ln, x / 17.4)).epsilon(1e-12));
        CHECK(pdf(DistributionSpec(Family::Rayleigh, 0.0, 10.3), x) == Catch::Approx(boost::math::pdf(r, x)).epsilon(1e-12));
        CHECK(cdf(DistributionSpec(Family::Weibull, 0.0, 50.0, {0.6}), x) == Catch::Approx(boost::math::cdf(w, x)).epsilon(1e-12));
    }
}

TEST_CASE("Distribution - log density")
{
    for (const auto &spec : parameter_points())
        for (double q : {0.001, 0.2, 0.5, 0.8, 0.999})
        {
            const double x = quantile(spec, q);
            INFO(family_name(spec.family()) << " x = " << x);
            CHECK(std::exp(log_pdf(spec, x)) == Catch::Approx(pdf(spec, x)).epsilon(1e-11));
        }
    const DistributionSpec beta(Family::Beta, 0.0, 1.0, {2.0, 2.0});
    CHECK(log_pdf(beta, 1.5) == -INFINITY);
    CHECK(pdf(beta, 1.5) == 0.0);
    CHECK(pdf(beta, -0.5) == 0.0);
}

TEST_CASE("Distribution - sampling")
{
    const DistributionSpec e(Family::Exponential, 0.0, 50.52);
    CHECK(sample(e, 0, 1).empty());
    CHECK(sample(e, 100, 7) == sample(e, 100, 7));
    CHECK(sample(e, 100, 7) != sample(e, 100, 8));

    const auto big = sample(e, 100000, 42);
    const double m = std::accumulate(big.begin(), big.end(), 0.0) / big.size();
    CHECK(std::abs(m - 50.52) / 50.52 < 0.01);

    const DistributionSpec lognormal(Family::LogNormal, -35.5, 17.4, {0.37});
    const auto ln = sample(lognormal, 100000, 43);
    CHECK(std::accumulate(ln.begin(), ln.end(), 0.0) / ln.size() == Catch::Approx(-16.87).margin(0.1));

    // Inversion consistency: KS distance below the 1% critical value
    std::uint64_t seed = 100;
    for (const auto &spec : parameter_points())
    {
        const auto xs = sample(spec, 10000, seed++);
        INFO(family_name(spec.family()) << " loc " << spec.loc() << " scale " << spec.scale());
        CHECK(ks_statistic(xs, spec) < 1.63 / std::sqrt(10000.0));
        for (double x : xs)
        {
            CHECK(x >= spec.support_lower());
            CHECK(x <= spec.support_upper());
        }
    }
}

TEST_CASE("Distribution - analytic means match sample means")
{
    std::uint64_t seed = 900;
    for (const auto &spec : parameter_points())
    {
        const auto m = mean(spec);
        if (!m)
            continue;
        if ((spec.family() == Family::LogLogistic && spec.shape() <= 2.0) || (spec.family() == Family::LogNormal && spec.shape() > 1.5))
            continue; // (near-)infinite variance, the sample mean converges too slowly to test
        const auto xs = sample(spec, 200000, seed++);
        const double sm = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        INFO(family_name(spec.family()) << " loc " << spec.loc() << " scale " << spec.scale());
        CHECK(std::abs(sm - *m) < 0.02 * spec.scale() * 5.0);
    }
}
