#include <benchmark/benchmark.h>

#include "ancss/analysis.hpp"
#include "ancss/channel.hpp"
#include "ancss/chaos.hpp"
#include "ancss/modem.hpp"
#include "ancss/montecarlo.hpp"
#include "ancss/network.hpp"
#include "ancss/rng.hpp"

namespace {

using namespace ancss;

void BM_SequenceGeneration(benchmark::State& state) {
    const auto length = static_cast<std::size_t>(state.range(0));
    BernoulliParams params;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_sequence(params, length, 0));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_SequenceGeneration)->Arg(10'000)->Arg(1'000'000);

void BM_GaussianStream(benchmark::State& state) {
    GaussianStream noise(42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noise.next());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(BM_GaussianStream);

void BM_Correlate(benchmark::State& state) {
    const int beta = 100;
    const std::size_t symbols = 1'000;
    BernoulliParams params;
    const auto code =
        generate_sequence(params, symbols * static_cast<std::size_t>(beta), 0);
    SplitMix64 rng(7);
    const ChipFrame frame = spread(random_bits(symbols, rng), code, beta);
    for (auto _ : state) {
        benchmark::DoNotOptimize(correlate(frame, code));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(frame.samples.size()));
}
BENCHMARK(BM_Correlate);

void BM_FullRound(benchmark::State& state) {
    const int num_users = static_cast<int>(state.range(0));
    const int beta = 100;
    const std::size_t symbols = 100;
    const double n0 = ebn0_to_n0(6.0, beta);

    NetworkConfig config;
    config.num_users = num_users;
    config.beta = beta;
    const auto params = assign_pair_seeds(
        static_cast<std::size_t>(num_users / 2), 42);
    for (std::size_t p = 0; p < params.size(); ++p) {
        config.pair_codes.push_back(generate_sequence(
            params[p], symbols * static_cast<std::size_t>(beta),
            static_cast<std::uint32_t>(p)));
    }
    SplitMix64 rng(11);
    std::vector<BitStream> bits;
    for (int u = 0; u < num_users; ++u) {
        bits.push_back(random_bits(symbols, rng));
    }
    GaussianStream uplink(1);
    GaussianStream downlink(2);

    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_round(config, bits, n0, &uplink, &downlink));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(symbols) * num_users);
}
BENCHMARK(BM_FullRound)->Arg(2)->Arg(4)->Arg(8);

void BM_EstimatePoint(benchmark::State& state) {
    const StopRule stop{50, 200'000};
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_point(4.0, 2, 100, stop, 42));
    }
}
BENCHMARK(BM_EstimatePoint)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ber_closed_form(100.0, 100.0 / (t * t)));
        t += 1e-6;
    }
}
BENCHMARK(BM_ClosedForm);

void BM_Quadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ber_quadrature(100.0, 3162.0));
    }
}
BENCHMARK(BM_Quadrature)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
