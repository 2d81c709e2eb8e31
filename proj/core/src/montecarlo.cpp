#include "ancss/montecarlo.hpp"

#include <bit>
#include <cmath>
#include <future>
#include <stdexcept>

#include "ancss/channel.hpp"

namespace ancss {

namespace {

// batches per stopping-rule check; fixed so results do not depend on the
// machine's thread count
constexpr int kWaveSize = 8;

struct BatchTally {
    long long trials = 0;
    long long errors = 0;
};

struct PointContext {
    double ebn0_db;
    int num_users;
    int beta;
    double n0;
    std::uint64_t point_key;   // seed, L, beta
    std::uint64_t ebn0_tag;
    RoundOptions options;
    std::size_t symbols_per_batch;
};

BatchTally run_batch(const PointContext& ctx, std::uint64_t batch) {
    const int L = ctx.num_users;
    const std::size_t nsym = ctx.symbols_per_batch;

    NetworkConfig config;
    config.num_users = L;
    config.beta = ctx.beta;
    const auto params = assign_pair_seeds(
        static_cast<std::size_t>(L / 2),
        derive_seed(ctx.point_key, {0x5eedu, batch}));
    config.pair_codes.reserve(params.size());
    for (std::size_t p = 0; p < params.size(); ++p) {
        config.pair_codes.push_back(generate_sequence(
            params[p], nsym * static_cast<std::size_t>(ctx.beta),
            static_cast<std::uint32_t>(p)));
    }

    SplitMix64 bit_rng(derive_seed(ctx.point_key, {0xb175u, batch}));
    std::vector<BitStream> bits(L);
    for (int u = 0; u < L; ++u) {
        bits[u] = random_bits(nsym, bit_rng);
    }

    GaussianStream uplink(
        derive_seed(ctx.point_key, {0x401feu, ctx.ebn0_tag, batch, 0}));
    GaussianStream downlink(
        derive_seed(ctx.point_key, {0x401feu, ctx.ebn0_tag, batch, 1}));

    const RoundResult result =
        run_round(config, bits, ctx.n0, &uplink, &downlink, ctx.options);

    BatchTally tally;
    tally.trials = static_cast<long long>(L) * static_cast<long long>(nsym);
    for (int u = 0; u < L; ++u) {
        const BitStream& own = bits[u];
        const BitStream& partner = bits[config.partner_of(u)];
        for (std::size_t i = 0; i < nsym; ++i) {
            if (result.decoded[u][i] != own[i] + partner[i]) {
                ++tally.errors;
            }
        }
    }
    return tally;
}

}  // namespace

void StopRule::validate() const {
    if (min_errors < 1) {
        throw std::invalid_argument("stop rule: min_errors must be >= 1");
    }
    if (max_trials < min_errors) {
        throw std::invalid_argument("stop rule: max_trials must be >= min_errors");
    }
}

void SweepConfig::validate() const {
    if (ebn0_grid_db.empty()) {
        throw std::invalid_argument("sweep: empty Eb/N0 grid");
    }
    if (user_counts.empty() || betas.empty()) {
        throw std::invalid_argument("sweep: empty L or beta list");
    }
    for (int L : user_counts) {
        if (L < 2 || L % 2 != 0) {
            throw std::invalid_argument("sweep: L must be even and >= 2");
        }
    }
    for (int b : betas) {
        if (b < 1) {
            throw std::invalid_argument("sweep: beta must be >= 1");
        }
    }
    if (batch_bits < 1) {
        throw std::invalid_argument("sweep: batch_bits must be >= 1");
    }
    stop.validate();
}

BerPoint estimate_point(double ebn0_db, int num_users, int beta,
                        const StopRule& stop, std::uint64_t seed,
                        const RoundOptions& options, int batch_bits) {
    stop.validate();
    if (num_users < 2 || num_users % 2 != 0) {
        throw std::invalid_argument("estimate_point: L must be even and >= 2");
    }

    PointContext ctx;
    ctx.ebn0_db = ebn0_db;
    ctx.num_users = num_users;
    ctx.beta = beta;
    ctx.n0 = ebn0_to_n0(ebn0_db, beta);
    ctx.point_key = derive_seed(seed, {static_cast<std::uint64_t>(num_users),
                                       static_cast<std::uint64_t>(beta)});
    ctx.ebn0_tag = std::bit_cast<std::uint64_t>(ebn0_db);
    ctx.options = options;
    ctx.symbols_per_batch = static_cast<std::size_t>(
        std::max(1, batch_bits / num_users));

    BerPoint point;
    point.ebn0_db = ebn0_db;
    point.num_users = num_users;
    point.beta = beta;

    std::uint64_t next_batch = 0;
    while (point.errors < stop.min_errors && point.trials < stop.max_trials) {
        std::vector<std::future<BatchTally>> wave;
        wave.reserve(kWaveSize);
        for (int i = 0; i < kWaveSize; ++i) {
            wave.push_back(std::async(std::launch::async | std::launch::deferred,
                                      run_batch, std::cref(ctx), next_batch++));
        }
        // merge in batch order and stop at the first batch that satisfies
        // the rule; later batches of the wave are discarded, which keeps the
        // tallies independent of how many batches ran speculatively
        for (auto& task : wave) {
            const BatchTally tally = task.get();
            if (point.errors >= stop.min_errors ||
                point.trials >= stop.max_trials) {
                continue;  // drain the remaining futures
            }
            point.trials += tally.trials;
            point.errors += tally.errors;
        }
    }

    if (point.errors < stop.min_errors) {
        point.hit_max_trials = true;
    }
    point.ber_hat = point.trials > 0
                        ? static_cast<double>(point.errors) /
                              static_cast<double>(point.trials)
                        : 0.0;
    point.ci95_halfwidth =
        point.trials > 0
            ? 1.96 * std::sqrt(point.ber_hat * (1.0 - point.ber_hat) /
                               static_cast<double>(point.trials))
            : 0.0;
    return point;
}

std::vector<BerPoint> run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<BerPoint> points;
    points.reserve(config.user_counts.size() * config.betas.size() *
                   config.ebn0_grid_db.size());
    for (int L : config.user_counts) {
        for (int beta : config.betas) {
            for (double ebn0 : config.ebn0_grid_db) {
                points.push_back(estimate_point(ebn0, L, beta, config.stop,
                                                config.seed, config.round,
                                                config.batch_bits));
            }
        }
    }
    return points;
}

}  // namespace ancss
