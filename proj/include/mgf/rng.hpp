#pragma once

#include <cstdint>

namespace mgf {

// Counter-based generator: draw i of stream s under seed q is
// mix(key(q, s) + i * GAMMA) with the SplitMix64 finalizer. Streams are
// independent of evaluation order, so per-shot streams make parallel
// sampling reproducible.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        key_ = mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL));
    }

    std::uint64_t next_u64() { return mix(key_ + (counter_++) * kGamma); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z += kGamma;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace mgf
