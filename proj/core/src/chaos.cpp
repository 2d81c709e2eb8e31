#include "ancss/chaos.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ancss/rng.hpp"

namespace ancss {

namespace {
constexpr std::size_t kBurnIn = 1000;
}

void BernoulliParams::validate() const {
    if (!(slope > 1.0) || !(slope <= 2.0)) {
        throw std::invalid_argument("bernoulli map: slope must be in (1, 2]");
    }
    if (!(offset > 0.0)) {
        throw std::invalid_argument("bernoulli map: offset must be positive");
    }
    const double a = offset / (slope - 1.0);
    if (!(std::fabs(x0) < a) || x0 == 0.0) {
        throw std::invalid_argument(
            "bernoulli map: x0 must be nonzero and strictly inside the "
            "invariant interval");
    }
}

double invariant_halfwidth(const BernoulliParams& params) {
    return params.offset / (params.slope - 1.0);
}

double bernoulli_step(double x, const BernoulliParams& params) {
    return x >= 0.0 ? params.slope * x - params.offset
                    : params.slope * x + params.offset;
}

ChaoticSequence generate_sequence(const BernoulliParams& params,
                                  std::size_t length, std::uint32_t pair_id) {
    params.validate();
    if (length < 2) {
        throw std::invalid_argument(
            "generate_sequence: degenerate length, need at least 2 chips to "
            "normalize to mean 0 and power 1");
    }

    double x = params.x0;
    for (std::size_t i = 0; i < kBurnIn; ++i) {
        x = bernoulli_step(x, params);
    }

    ChaoticSequence seq;
    seq.pair_id = pair_id;
    seq.chips.resize(length);
    double sum = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        x = bernoulli_step(x, params);
        seq.chips[i] = x;
        sum += x;
    }

    const double mean = sum / static_cast<double>(length);
    double ssq = 0.0;
    for (double c : seq.chips) {
        ssq += (c - mean) * (c - mean);
    }
    const double rms = std::sqrt(ssq / static_cast<double>(length));
    const double scale = invariant_halfwidth(params);
    if (!(rms > 1e-12 * scale)) {
        throw std::invalid_argument(
            "generate_sequence: degenerate orbit (fixed point or collapsed), "
            "change x0");
    }
    for (double& c : seq.chips) {
        c = (c - mean) / rms;
    }
    return seq;
}

std::vector<BernoulliParams> assign_pair_seeds(std::size_t num_pairs,
                                               std::uint64_t master_seed) {
    if (num_pairs < 1) {
        throw std::invalid_argument("assign_pair_seeds: need at least one pair");
    }
    BernoulliParams base;
    const double a = invariant_halfwidth(base);
    SplitMix64 expand(derive_seed(master_seed, {num_pairs}));

    std::vector<BernoulliParams> out;
    out.reserve(num_pairs);
    while (out.size() < num_pairs) {
        // map into (-a, a), keep away from the fixed point at 0 and from the
        // interval edges
        const double u = expand.next_double();
        const double x0 = (2.0 * u - 1.0) * a * 0.999;
        if (std::fabs(x0) < 1e-3 * a) {
            continue;
        }
        bool duplicate = false;
        for (const auto& p : out) {
            if (p.x0 == x0) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) {
            continue;
        }
        BernoulliParams p = base;
        p.x0 = x0;
        out.push_back(p);
    }
    return out;
}

}  // namespace ancss
