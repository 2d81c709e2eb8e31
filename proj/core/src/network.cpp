#include "ancss/network.hpp"

#include <stdexcept>

#include "ancss/channel.hpp"

namespace ancss {

void NetworkConfig::validate(std::size_t num_symbols) const {
    if (num_users < 2 || num_users % 2 != 0) {
        throw std::invalid_argument("network: user count must be even and >= 2");
    }
    if (beta < 1) {
        throw std::invalid_argument("network: beta must be >= 1");
    }
    if (pair_codes.size() != static_cast<std::size_t>(num_users / 2)) {
        throw std::invalid_argument("network: need one spreading code per pair");
    }
    const std::size_t needed = num_symbols * static_cast<std::size_t>(beta);
    for (const auto& seq : pair_codes) {
        if (seq.length() < needed) {
            throw std::invalid_argument("network: spreading code too short");
        }
    }
}

Thresholds compute_thresholds(double eb) {
    if (!(eb > 0.0)) {
        throw std::invalid_argument("compute_thresholds: energy must be positive");
    }
    return Thresholds{-eb, +eb};
}

ChipFrame relay_superpose(const std::vector<ChipFrame>& frames,
                          GaussianStream* uplink, double n0) {
    if (frames.empty()) {
        throw std::invalid_argument("relay_superpose: no user frames");
    }
    ChipFrame sum = frames.front();
    for (std::size_t u = 1; u < frames.size(); ++u) {
        if (frames[u].samples.size() != sum.samples.size()) {
            throw std::invalid_argument("relay_superpose: frame length mismatch");
        }
        for (std::size_t i = 0; i < sum.samples.size(); ++i) {
            sum.samples[i] += frames[u].samples[i];
        }
    }
    if (uplink != nullptr) {
        add_awgn(sum.samples, n0, *uplink);
    }
    return sum;
}

ChipFrame broadcast(const ChipFrame& relay_frame, GaussianStream* downlink,
                    double n0, double gain) {
    ChipFrame out = relay_frame;
    if (gain != 1.0) {
        for (double& s : out.samples) {
            s *= gain;
        }
    }
    if (downlink != nullptr) {
        add_awgn(out.samples, n0, *downlink);
    }
    return out;
}

RoundResult run_round(const NetworkConfig& config,
                      const std::vector<BitStream>& bits_per_user, double n0,
                      GaussianStream* uplink, GaussianStream* downlink,
                      const RoundOptions& options) {
    if (bits_per_user.size() != static_cast<std::size_t>(config.num_users)) {
        throw std::invalid_argument("run_round: need one bit stream per user");
    }
    const std::size_t num_symbols = bits_per_user.front().size();
    for (const auto& bits : bits_per_user) {
        if (bits.size() != num_symbols) {
            throw std::invalid_argument("run_round: unequal bit stream lengths");
        }
    }
    config.validate(num_symbols);

    if (options.noiseless) {
        uplink = nullptr;
        downlink = nullptr;
    }

    // transmission phase: all users emit simultaneously, chip-aligned
    std::vector<ChipFrame> frames;
    frames.reserve(bits_per_user.size());
    for (int u = 0; u < config.num_users; ++u) {
        frames.push_back(
            spread(bits_per_user[u], config.pair_codes[config.pair_of(u)],
                   config.beta));
    }

    ChipFrame at_relay = relay_superpose(frames, uplink, n0);
    ChipFrame received = broadcast(at_relay, downlink, n0, options.relay_gain);

    const double nominal_eb = static_cast<double>(config.beta);

    RoundResult result;
    result.decision.resize(config.num_users);
    result.decoded.resize(config.num_users);
    result.recovered.resize(config.num_users);
    for (int u = 0; u < config.num_users; ++u) {
        const ChaoticSequence& code = config.pair_codes[config.pair_of(u)];
        result.decision[u] = correlate(received, code);
        result.decoded[u].resize(num_symbols);
        result.recovered[u].resize(num_symbols);
        for (std::size_t i = 0; i < num_symbols; ++i) {
            double eb = nominal_eb;
            if (options.per_bit_energy) {
                eb = 0.0;
                const std::size_t base = i * static_cast<std::size_t>(config.beta);
                for (int k = 0; k < config.beta; ++k) {
                    eb += code.chips[base + k] * code.chips[base + k];
                }
            }
            const Thresholds th = compute_thresholds(eb);
            const int symbol = ternary_decode(result.decision[u][i], th);
            result.decoded[u][i] = symbol;
            result.recovered[u][i] =
                extract_partner_symbol(symbol, bits_per_user[u][i]);
        }
    }
    return result;
}

}  // namespace ancss
