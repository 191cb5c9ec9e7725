#include "realign/estimator.hpp"

#include <cmath>

#include "realign/bipartite.hpp"

namespace realignment {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t bits = mix64(seed + (counter + 1) * kGolden);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

ShotEstimate sample_t1(const DensityMatrix& rho, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw ArgumentError("sample_t1 requires shots >= 1");
    const auto& dims = rho.dims();
    if (!dims.is_square_bipartite())
        throw UnsupportedError("sample_t1 requires a square bipartite state");
    const double d = static_cast<double>(dims.m());

    double p = first_moment(rho) / d; // <Phi+|rho|Phi+>
    if (p < -1e-10 || p > 1.0 + 1e-10)
        throw ValidationError(ValidationError::Kind::Positivity,
                              "projector probability outside [0, 1]");
    p = std::min(1.0, std::max(0.0, p));

    std::int64_t successes = 0;
    for (std::int64_t i = 0; i < shots; ++i)
        if (counter_uniform(seed, static_cast<std::uint64_t>(i)) < p) ++successes;

    const double p_hat = static_cast<double>(successes) / static_cast<double>(shots);
    ShotEstimate est;
    est.estimate = d * p_hat;
    est.stderr_ = d * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(shots));
    est.shots = shots;
    est.seed = seed;
    return est;
}

} // namespace realignment
