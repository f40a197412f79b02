#pragma once

#include <array>
#include <cstdint>

// Counter-based RNG. Each (master_seed, stream_index) pair names an
// independent substream whose output depends on nothing else, so trials can
// be farmed out to any number of workers and still reproduce bit for bit.
// The generator is Philox4x64 with 10 rounds; known-answer vectors are
// pinned in the test suite.

namespace polylab::rng {

// One 4x64 Philox block at the given counter/key.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

class SeededStream {
  public:
    SeededStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : seed_(master_seed), stream_(stream_index) {}

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }

    std::uint64_t next_u64();
    // Uniform on the open interval (0,1); 53-bit resolution, never 0 or 1.
    double next_unit();
    // Uniform on (-1,1).
    double next_symmetric();
    // Standard normal via Box-Muller (pairs cached).
    double next_gaussian();
    // Single fair bit (+1/-1 as double).
    double next_sign();

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;        // counter word 0 of the next block
    std::array<std::uint64_t, 4> buf_{};
    int pos_ = 4;                    // buffered words consumed
    double gauss_spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace polylab::rng
