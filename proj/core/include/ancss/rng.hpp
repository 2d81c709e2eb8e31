#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace ancss {

// splitmix64 (Vigna). Used both as the seed-expansion hash for deriving
// independent sub-streams and as the uniform source behind the Gaussian
// generator. Fully deterministic for a given state.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1), never exactly 0 or 1
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

  private:
    std::uint64_t state_;
};

// Derives a sub-stream seed from a master seed and a list of tags
// (pair index, batch index, hop index, ...). Documented scheme:
// fold each tag into the state and advance splitmix64 once per tag.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = master;
    for (std::uint64_t t : tags) {
        SplitMix64 g(s ^ (t + 0x9e3779b97f4a7c15ull));
        s = g.next();
    }
    return s;
}

// Box-Muller transform over splitmix64 uniforms. One logical stream per
// (round, hop); streams are never shared between concurrent rounds.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : uniforms_(seed) {}

    // standard normal
    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniforms_.next_double();
        const double u2 = uniforms_.next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    SplitMix64 uniforms_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ancss
