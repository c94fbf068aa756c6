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

#ifndef CHANSTAT_RNG_HPP
#define CHANSTAT_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace chanstat
{
    // Deterministic uniform source: the 64-bit Mersenne Twister (std::mt19937_64), whose output
    // sequence is fixed by the C++ standard, so a seed reproduces the same draws on any platform.
    // Conversions to doubles and bounded integers are done here rather than through the
    // implementation-defined std:: distributions.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next() { return engine_(); }

        // Uniform double on the open interval (0, 1), 53-bit resolution
        double uniform();

        // Uniform integer on [0, n), n > 0, without modulo bias
        std::size_t index(std::size_t n);

    private:
        std::mt19937_64 engine_;
    };

    // Seed of an independent stream for task `index` derived from `base` (SplitMix64 finalizer)
    std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

} // namespace chanstat

#endif
