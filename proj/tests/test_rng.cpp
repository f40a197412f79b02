#include "doctest.h"

#include <cmath>
#include <vector>

#include "polylab/rng.hpp"

using namespace polylab;

// Known answers generated with an independent Philox4x64-10 implementation
// (numpy.random.Philox raw output).
TEST_CASE("philox4x64-10 known answers") {
    using A4 = std::array<std::uint64_t, 4>;
    using A2 = std::array<std::uint64_t, 2>;

    CHECK(rng::philox4x64(A4{1, 0, 0, 0}, A2{0, 0}) ==
          A4{0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL,
             0x907d7a052fd5b4dcULL});
    CHECK(rng::philox4x64(A4{2, 0, 0, 0}, A2{0, 0}) ==
          A4{0x809bf322883987c3ULL, 0x471128b9e807f7ddULL, 0xf250ba0dbec065b7ULL,
             0xfc6ed66767a457bcULL});
    CHECK(rng::philox4x64(A4{1, 0, 0, 0}, A2{0xDEADBEEF12345678ULL, 0}) ==
          A4{0x01e08b9944fc9ce9ULL, 0x4dd35999ef97e4c4ULL, 0xfb4385fe6262b926ULL,
             0xe8ca5d2e2ace8c50ULL});
    CHECK(rng::philox4x64(A4{0x13198A2E03707345ULL, 0, 0, 0}, A2{0x243F6A8885A308D3ULL, 0}) ==
          A4{0x822f0a37a02b7eebULL, 0x62fa89af23db202dULL, 0xe766bc1ef6893ba4ULL,
             0xa8028162b2babc2aULL});
}

TEST_CASE("streams reproduce bit-identically and are distinct") {
    rng::SeededStream a(123456789, 7);
    rng::SeededStream b(123456789, 7);
    rng::SeededStream c(123456789, 8);
    rng::SeededStream d(987654321, 7);

    bool all_equal = true, differs_stream = false, differs_seed = false;
    for (int i = 0; i < 1000; ++i) {
        auto va = a.next_u64();
        all_equal &= (va == b.next_u64());
        differs_stream |= (va != c.next_u64());
        differs_seed |= (va != d.next_u64());
    }
    CHECK(all_equal);
    CHECK(differs_stream);
    CHECK(differs_seed);
}

TEST_CASE("unit draws live strictly inside (0,1)") {
    rng::SeededStream s(5, 0);
    for (int i = 0; i < 100000; ++i) {
        double u = s.next_unit();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gaussian moments at 10^6 draws") {
    rng::SeededStream s(2024, 3);
    const int m = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < m; ++i) {
        double g = s.next_gaussian();
        sum += g;
        sum_sq += g * g;
    }
    double mean = sum / m;
    double var = sum_sq / m - mean * mean;
    CHECK(std::fabs(mean) < 5.0 / std::sqrt(static_cast<double>(m)));
    CHECK(var == doctest::Approx(1.0).epsilon(0.01));
}
