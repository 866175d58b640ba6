#pragma once

#include "exactform/expr.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace exactform {

// splitmix64 (Steele, Lea, Flood 2014). Chosen because the output stream is
// bit-exact across platforms and trivially splittable: the i-th output for a
// seed s is mix(s + (i+1)*GOLDEN), so a master seed plus an index addresses
// any trial directly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // i-th output of the stream started at `seed`, without advancing state.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index);

    // Uniform in [0, n), n > 0. Multiply-shift reduction; deterministic.
    std::uint64_t next_below(std::uint64_t n);

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);

    // Uniform double in [lo, hi) with 53-bit resolution.
    double next_double(double lo, double hi);

private:
    std::uint64_t state_;
};

struct Interval {
    double lo = 0.5;
    double hi = 2.0;
};

// Axis-aligned sampling region. Unlisted variables fall back to the default
// interval [0.5, 2], which is positive and clear of ln/reciprocal
// singularities.
class DomainBox {
public:
    DomainBox() = default;

    Interval interval(const std::string& var) const;
    void set(const std::string& var, Interval iv);

private:
    std::map<std::string, Interval> intervals_;
};

struct SamplingConfig {
    int samples = 32;
    int min_valid = 8;
    double tolerance = 1e-9;
    DomainBox box;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Draws up to `count` assignments of `vars` uniformly from `box`, rejecting
// points where `valid` throws DomainError. Stops early after `max_attempts`
// rejections in total. Throws InsufficientSamplesError if fewer than
// min_valid points survive.
std::vector<Assignment> sample_valid_points(
    const std::vector<std::string>& vars,
    const DomainBox& box,
    int count,
    int min_valid,
    SplitMix64& rng,
    const std::function<void(const Assignment&)>& valid,
    int max_attempts = 1000);

} // namespace exactform
