#pragma once

#include <array>
#include <cstdint>

namespace sincgap {

/**
 * Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
 * numbers: as easy as 1, 2, 3", SC'11). A keyed bijection of a 128-bit
 * counter; there is no state to advance, so any draw can be computed
 * directly from (key, counter).
 */
namespace philox {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

constexpr Counter round(Counter ctr, Key key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

constexpr Counter philox4x32_10(Counter ctr, Key key) {
    for (int i = 0; i < 10; ++i) {
        if (i > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        ctr = round(ctr, key);
    }
    return ctr;
}

}  // namespace philox

/// Which family of draws a counter block belongs to; keeps unrelated uses disjoint.
enum class RandomDomain : std::uint32_t {
    coefficients = 0,
    tail_modes = 1,
    auxiliary = 2,
    uniform_cube = 3,
};

/**
 * Two 64-bit words for block `block` of stream `stream` under `master_seed`.
 * Pure function of its arguments.
 */
inline std::array<std::uint64_t, 2> random_block(std::uint64_t master_seed, std::uint64_t stream,
                                                 RandomDomain domain, std::uint64_t block) {
    // Block index is folded into 32 bits of counter plus 32 bits of domain word;
    // the domain tag occupies the low byte of the top word.
    const philox::Counter ctr{static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(stream),
                              static_cast<std::uint32_t>(stream >> 32),
                              (static_cast<std::uint32_t>(block >> 32) << 8) |
                                  static_cast<std::uint32_t>(domain)};
    const philox::Key key{static_cast<std::uint32_t>(master_seed),
                          static_cast<std::uint32_t>(master_seed >> 32)};
    const auto out = philox::philox4x32_10(ctr, key);
    return {(static_cast<std::uint64_t>(out[1]) << 32) | out[0],
            (static_cast<std::uint64_t>(out[3]) << 32) | out[2]};
}

/// Uniform on (0, 1]: never returns 0, so log() of it is finite.
inline double to_unit_open_closed(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

/// Uniform on [0, 1).
inline double to_unit_closed_open(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace sincgap
