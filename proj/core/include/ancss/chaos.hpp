#pragma once

#include <cstdint>
#include <vector>

namespace ancss {

// Piecewise-linear Bernoulli map parameters. The map stays chaotic and
// bounded on [-offset/(slope-1), offset/(slope-1)] for 1 < slope <= 2.
struct BernoulliParams {
    double slope = 1.99;   // G
    double offset = 1.0;   // F
    double x0 = 0.1;       // initial condition, in the open invariant interval

    void validate() const;
};

// Half-width of the map's invariant interval.
double invariant_halfwidth(const BernoulliParams& params);

// One map iteration: slope*x - offset for x >= 0, slope*x + offset otherwise.
// The boundary x = 0 takes the first branch.
double bernoulli_step(double x, const BernoulliParams& params);

// Normalized spreading chips shared by one pair of users.
// After generation: empirical mean 0 and empirical mean-square 1, exactly
// up to floating-point rounding.
struct ChaoticSequence {
    std::vector<double> chips;
    std::uint32_t pair_id = 0;

    std::size_t length() const { return chips.size(); }
};

// Iterates the map from x0 (after a fixed burn-in of 1000 transient steps),
// then affinely normalizes the raw samples to mean 0 and mean-square 1.
// Throws std::invalid_argument on bad params, length < 2, or a degenerate
// (fixed-point / collapsed) orbit; the caller must change x0.
ChaoticSequence generate_sequence(const BernoulliParams& params,
                                  std::size_t length, std::uint32_t pair_id);

// Deterministically expands master_seed into num_pairs parameter sets with
// pairwise-distinct initial conditions inside the invariant interval.
std::vector<BernoulliParams> assign_pair_seeds(std::size_t num_pairs,
                                               std::uint64_t master_seed);

}  // namespace ancss
