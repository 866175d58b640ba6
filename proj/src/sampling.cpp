#include "exactform/sampling.hpp"

#include "exactform/errors.hpp"

namespace exactform {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

} // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix(state_);
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + (index + 1) * kGolden);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
    // floor(next * n / 2^64); the bias is < n/2^64 and, unlike std::uniform_*
    // distributions, the result is identical on every platform
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
}

std::int64_t SplitMix64::next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + next_below(span));
}

double SplitMix64::next_double(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

Interval DomainBox::interval(const std::string& var) const {
    auto it = intervals_.find(var);
    return it == intervals_.end() ? Interval{} : it->second;
}

void DomainBox::set(const std::string& var, Interval iv) { intervals_[var] = iv; }

std::vector<Assignment> sample_valid_points(
    const std::vector<std::string>& vars,
    const DomainBox& box,
    int count,
    int min_valid,
    SplitMix64& rng,
    const std::function<void(const Assignment&)>& valid,
    int max_attempts) {
    std::vector<Assignment> points;
    int rejections = 0;
    while (static_cast<int>(points.size()) < count && rejections < max_attempts) {
        Assignment a;
        for (const auto& v : vars) {
            const Interval iv = box.interval(v);
            a[v] = rng.next_double(iv.lo, iv.hi);
        }
        try {
            valid(a);
        } catch (const DomainError&) {
            ++rejections;
            continue;
        }
        points.push_back(std::move(a));
    }
    if (static_cast<int>(points.size()) < min_valid)
        throw InsufficientSamplesError(
            "only " + std::to_string(points.size()) + " of " + std::to_string(min_valid) +
            " required sample points were domain-valid after " + std::to_string(rejections) +
            " rejections");
    return points;
}

} // namespace exactform
