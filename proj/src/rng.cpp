#include "polylab/rng.hpp"

#include <cmath>

namespace polylab::rng {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key) {
    std::array<std::uint64_t, 4> c = counter;
    std::array<std::uint64_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

void SeededStream::refill() {
    buf_ = philox4x64({block_, stream_, 0, 0}, {seed_, stream_});
    ++block_;
    pos_ = 0;
}

std::uint64_t SeededStream::next_u64() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
}

double SeededStream::next_unit() {
    // Top 53 bits, offset by half an ulp to stay inside (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededStream::next_symmetric() { return 2.0 * next_unit() - 1.0; }

double SeededStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return gauss_spare_;
    }
    double u1 = next_unit();
    double u2 = next_unit();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.28318530717958647692 * u2;
    gauss_spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

double SeededStream::next_sign() { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

}  // namespace polylab::rng
