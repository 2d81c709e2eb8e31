#pragma once

#include <vector>

#include "ancss/chaos.hpp"
#include "ancss/rng.hpp"

namespace ancss {

// Antipodal data symbols, every element is exactly -1 or +1.
using BitStream = std::vector<int>;

// Baseband chip samples. Rectangular pulse with unit chip time, so one
// sample is one chip and samples.size() == beta * num_symbols.
struct ChipFrame {
    std::vector<double> samples;
    int beta = 1;
    std::size_t num_symbols = 0;
};

// CSK spreading: sample[i*beta + k] = bits[i] * seq.chips[i*beta + k].
// Throws std::invalid_argument if the sequence is too short.
ChipFrame spread(const BitStream& bits, const ChaoticSequence& seq, int beta);

// Correlation despreading: D_i = sum_k frame[i*beta + k] * chips[i*beta + k].
// Throws std::invalid_argument on a length mismatch.
std::vector<double> correlate(const ChipFrame& frame, const ChaoticSequence& seq);

// Sign detector; the tie at exactly 0 resolves to +1.
inline int sign_detect(double decision) { return decision >= 0.0 ? +1 : -1; }

// Equiprobable +-1 source for simulation.
BitStream random_bits(std::size_t count, SplitMix64& rng);

}  // namespace ancss
