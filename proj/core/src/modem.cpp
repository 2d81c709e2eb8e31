#include "ancss/modem.hpp"

#include <stdexcept>

namespace ancss {

ChipFrame spread(const BitStream& bits, const ChaoticSequence& seq, int beta) {
    if (beta < 1) {
        throw std::invalid_argument("spread: beta must be >= 1");
    }
    const std::size_t needed = bits.size() * static_cast<std::size_t>(beta);
    if (seq.length() < needed) {
        throw std::invalid_argument("spread: spreading sequence too short");
    }
    ChipFrame frame;
    frame.beta = beta;
    frame.num_symbols = bits.size();
    frame.samples.resize(needed);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const double s = static_cast<double>(bits[i]);
        const std::size_t base = i * static_cast<std::size_t>(beta);
        for (std::size_t k = 0; k < static_cast<std::size_t>(beta); ++k) {
            frame.samples[base + k] = s * seq.chips[base + k];
        }
    }
    return frame;
}

std::vector<double> correlate(const ChipFrame& frame, const ChaoticSequence& seq) {
    const std::size_t n = frame.samples.size();
    if (seq.length() < n ||
        n != frame.num_symbols * static_cast<std::size_t>(frame.beta)) {
        throw std::invalid_argument("correlate: frame/sequence length mismatch");
    }
    std::vector<double> decisions(frame.num_symbols);
    for (std::size_t i = 0; i < frame.num_symbols; ++i) {
        const std::size_t base = i * static_cast<std::size_t>(frame.beta);
        double d = 0.0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(frame.beta); ++k) {
            d += frame.samples[base + k] * seq.chips[base + k];
        }
        decisions[i] = d;
    }
    return decisions;
}

BitStream random_bits(std::size_t count, SplitMix64& rng) {
    BitStream bits(count);
    for (std::size_t i = 0; i < count; ++i) {
        bits[i] = (rng.next() >> 63) ? +1 : -1;
    }
    return bits;
}

}  // namespace ancss
