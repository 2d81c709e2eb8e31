#pragma once

#include <cstdint>
#include <vector>

#include "ancss/network.hpp"

namespace ancss {

struct StopRule {
    long long min_errors = 200;
    long long max_trials = 100'000'000;  // bits per point

    void validate() const;
};

struct BerPoint {
    double ebn0_db = 0.0;
    int num_users = 2;
    int beta = 1;
    long long trials = 0;
    long long errors = 0;
    double ber_hat = 0.0;
    double ci95_halfwidth = 0.0;  // Wald interval
    // reached max_trials before min_errors; with zero errors this marks the
    // flagged zero-error point
    bool hit_max_trials = false;
};

struct SweepConfig {
    std::vector<double> ebn0_grid_db{0, 2, 4, 6, 8, 10, 12, 14};
    std::vector<int> user_counts{2, 4, 8};
    std::vector<int> betas{100, 200};
    StopRule stop;
    std::uint64_t seed = 42;
    RoundOptions round;
    int batch_bits = 10'000;

    void validate() const;
};

// Estimates the BER of the full protocol round at one sweep point.
// Errors are counted per user and symbol against the true superposed relay
// symbol (own-data subtraction without magnitude clamping), which is the
// quantity the analytic evaluator models. Batches derive independent
// chip/bit/noise streams from (seed, L, beta, batch); the spreading
// sequences do not depend on the Eb/N0 grid position. Deterministic for a
// fixed seed, independent of thread count.
BerPoint estimate_point(double ebn0_db, int num_users, int beta,
                        const StopRule& stop, std::uint64_t seed,
                        const RoundOptions& options = {},
                        int batch_bits = 10'000);

// Cartesian product of user_counts x betas x ebn0_grid, estimated
// independently, in deterministic order.
std::vector<BerPoint> run_sweep(const SweepConfig& config);

}  // namespace ancss
