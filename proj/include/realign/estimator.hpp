#ifndef REALIGN_ESTIMATOR_HPP
#define REALIGN_ESTIMATOR_HPP

#include <cstdint>

#include "realign/states.hpp"

namespace realignment {

/// Shot-based estimate of t1 = Tr[rho P^{T_B}] = d <Phi+|rho|Phi+>.
struct ShotEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Counter-based uniform draw in [0, 1): shot i of a stream is a pure
/// function of (seed, i), so parallel sweeps stay reproducible.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

/// Simulates the two-outcome POVM {|Phi+><Phi+|, I - |Phi+><Phi+|}:
/// Bernoulli draws with p = <Phi+|rho|Phi+>, estimate = d * successes/shots,
/// stderr = d * sqrt(p_hat (1 - p_hat) / shots). Deterministic per seed.
ShotEstimate sample_t1(const DensityMatrix& rho, std::int64_t shots, std::uint64_t seed);

} // namespace realignment

#endif
