#include "ancss/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ancss {

double ebn0_to_n0(double ebn0_db, int beta) {
    if (beta < 1) {
        throw std::invalid_argument("ebn0_to_n0: beta must be >= 1");
    }
    return static_cast<double>(beta) / std::pow(10.0, ebn0_db / 10.0);
}

ChannelParams make_channel(double ebn0_db, int beta, std::uint64_t seed) {
    ChannelParams p;
    p.ebn0_db = ebn0_db;
    p.beta = beta;
    p.n0 = ebn0_to_n0(ebn0_db, beta);
    p.seed = seed;
    return p;
}

std::vector<double> awgn(std::size_t length, double n0, GaussianStream& stream) {
    std::vector<double> samples(length);
    add_awgn(samples, n0, stream);
    return samples;
}

void add_awgn(std::span<double> samples, double n0, GaussianStream& stream) {
    if (!(n0 > 0.0)) {
        throw std::invalid_argument(
            "awgn: n0 must be positive; use the noiseless path for exact zero "
            "noise");
    }
    const double sigma = std::sqrt(n0 / 2.0);
    for (double& s : samples) {
        s += sigma * stream.next();
    }
}

}  // namespace ancss
