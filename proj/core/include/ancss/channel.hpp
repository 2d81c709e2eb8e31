#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ancss/rng.hpp"

namespace ancss {

// One sweep point of the channel bookkeeping. n0 is derived from the
// Eb/N0 axis with E_b = beta (unit-power chips).
struct ChannelParams {
    double ebn0_db = 0.0;
    double n0 = 1.0;
    int beta = 1;
    std::uint64_t seed = 0;
};

// n0 = beta / 10^(ebn0_db / 10)
double ebn0_to_n0(double ebn0_db, int beta);

ChannelParams make_channel(double ebn0_db, int beta, std::uint64_t seed);

// i.i.d. Gaussian samples with mean 0 and per-sample variance n0/2
// (one hop's worth of noise). Throws on n0 <= 0.
std::vector<double> awgn(std::size_t length, double n0, GaussianStream& stream);

// In-place variant: adds one AWGN realization to the samples.
void add_awgn(std::span<double> samples, double n0, GaussianStream& stream);

}  // namespace ancss
