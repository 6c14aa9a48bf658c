#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rotorcrypt/errors.hpp"

namespace rotorcrypt {

/// Parameters of the Henon recurrence. Defaults to the chaotic regime
/// a = 1.4, b = 0.3; anything else must be requested explicitly.
class HenonParams {
public:
    HenonParams() = default;

    static HenonParams non_chaotic_override(double a, double b) {
        HenonParams p;
        p.a_ = a;
        p.b_ = b;
        return p;
    }

    double a() const { return a_; }
    double b() const { return b_; }

private:
    double a_ = 1.4;
    double b_ = 0.3;
};

struct HenonState {
    double x = 0.0;
    double y = 0.0;
    std::uint64_t n = 0;
};

/// Divergence guard applied to every iterate.
inline constexpr double kHenonDivergenceLimit = 1e6;

/// One step of x' = 1 + y - a*x^2, y' = b*x.
/// Throws DivergenceError if |x'| exceeds the guard.
HenonState henon_iterate(const HenonState& state, const HenonParams& params = {});

/// Maps a raw Henon coordinate to a byte: floor(256*x), Euclidean mod 256.
std::uint8_t byte_from_coordinate(double x);

/// Keyed byte stream: seeds the map at x0 = (seed - 127.5)/1275, y0 = 0,
/// discards 1000 burn-in iterates, then emits `length` bytes.
std::vector<std::uint8_t> henon_byte_sequence(std::uint8_t seed, std::size_t length);

/// A bijection on [0,255] together with its inverse.
struct Permutation256 {
    std::array<std::uint8_t, 256> forward{};
    std::array<std::uint8_t, 256> inverse{};
};

/// Repairs a raw sequence over [0,domain) into a bijection: the first
/// occurrence of each value stays, later duplicates are replaced
/// left-to-right by the unused values in ascending order.
std::vector<int> complete_into_bijection(std::span<const int> raw, int domain);

/// 256-entry specialization used for rotor wirings.
Permutation256 complete_permutation(std::span<const std::uint8_t> raw);

}  // namespace rotorcrypt
