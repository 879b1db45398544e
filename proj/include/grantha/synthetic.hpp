#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grantha/ink.hpp"

namespace grantha::synthetic {

/// Ids of the ten parametric stroke classes: lines at four orientations,
/// arcs opening up and down, loops in both senses and two mirrored hooks.
const std::vector<std::string>& class_ids();

struct Params {
    std::size_t min_points = 16;
    std::size_t max_points = 24;
    /// Gaussian coordinate jitter as a fraction of the larger bbox side.
    double jitter = 0.02;
    /// Sampling follows s = u^gamma over uniform u, with log(gamma) uniform
    /// in [log(gamma_min), log(gamma_max)]. gamma = 1 means even timing.
    double gamma_min = 0.45;
    double gamma_max = 2.2;
};

/// One sample of `class_id` drawn from `seed`.
InkSample make_sample(const std::string& class_id, std::uint64_t seed, const Params& params = {});

struct Benchmark {
    std::vector<InkSample> train;
    std::vector<InkSample> test;
};

/// `per_class` training and `per_class` test samples of every class.
Benchmark make_benchmark(std::size_t per_class, std::uint64_t seed, const Params& params = {});

}  // namespace grantha::synthetic
