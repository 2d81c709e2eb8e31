#pragma once

#include <vector>

#include "ancss/chaos.hpp"
#include "ancss/modem.hpp"

namespace ancss {

// Static network layout: num_users is even, users 2p and 2p+1 form pair p
// and share pair_codes[p]. Perfect chip-level synchronization is assumed
// (the relay's request-to-transmit phase).
struct NetworkConfig {
    int num_users = 2;
    int beta = 100;
    std::vector<ChaoticSequence> pair_codes;

    void validate(std::size_t num_symbols) const;
    int partner_of(int user) const { return user ^ 1; }
    int pair_of(int user) const { return user / 2; }
};

// Decode thresholds, symmetric about zero: (-eb, +eb).
struct Thresholds {
    double lower = -1.0;
    double upper = +1.0;
};

// Optimal noise-free thresholds for the {-2, 0, +2} relay symbol set.
// Throws on non-positive energy.
Thresholds compute_thresholds(double eb);

// Three-level decision: +2 above upper, -2 below lower, 0 otherwise
// (boundary values decode to 0).
inline int ternary_decode(double decision, const Thresholds& th) {
    if (decision > th.upper) return +2;
    if (decision < th.lower) return -2;
    return 0;
}

// Own-data subtraction per the ANC mapping: the raw difference
// decoded - own lies in {-3, -1, +1, +3}; the bit decision is its sign.
inline int extract_partner_symbol(int decoded, int own) {
    return sign_detect(static_cast<double>(decoded - own));
}

// Elementwise sum of all user frames plus one uplink AWGN realization.
// Pass uplink == nullptr for the exact noiseless path.
ChipFrame relay_superpose(const std::vector<ChipFrame>& frames,
                          GaussianStream* uplink, double n0);

// Relay forward: adds one independent downlink AWGN realization. The relay
// applies no amplification by default (gain hook outside the validated path).
ChipFrame broadcast(const ChipFrame& relay_frame, GaussianStream* downlink,
                    double n0, double gain = 1.0);

struct RoundOptions {
    // decode against the exact per-symbol energy sum(x^2) instead of the
    // nominal E_b = beta
    bool per_bit_energy = false;
    // exact-zero noise on both hops (not emulated with a tiny n0)
    bool noiseless = false;
    double relay_gain = 1.0;
};

struct RoundResult {
    // indexed [user][symbol]
    std::vector<std::vector<double>> decision;
    std::vector<std::vector<int>> decoded;    // ternary relay-symbol estimates
    std::vector<BitStream> recovered;         // partner-bit estimates
};

// One full protocol round: spread -> relay superposition (uplink noise) ->
// broadcast (downlink noise) -> per-user correlation, ternary decode and
// own-data subtraction. Noise streams may be nullptr for noiseless runs.
RoundResult run_round(const NetworkConfig& config,
                      const std::vector<BitStream>& bits_per_user, double n0,
                      GaussianStream* uplink, GaussianStream* downlink,
                      const RoundOptions& options = {});

}  // namespace ancss
