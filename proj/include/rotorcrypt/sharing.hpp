#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rotorcrypt/errors.hpp"
#include "rotorcrypt/machine.hpp"

namespace rotorcrypt {

struct SharingParams {
    int n = 5;
    int k = 3;
    std::uint32_t p = 257;

    bool operator==(const SharingParams&) const = default;
};

/// One participant's point: evaluations of the 7 per-byte polynomials at x.
struct Share {
    std::uint8_t x = 0;
    std::array<std::uint16_t, 7> values{};
    SharingParams params;
};

/// Supplies one uniform field element in [0, p) per call.
using CoeffSource = std::function<std::uint32_t(std::uint32_t p)>;

/// Cryptographically random coefficients.
CoeffSource random_coeff_source();

/// Deterministic coefficients from a PRNG seed, for reproducible splits.
CoeffSource seeded_coeff_source(std::uint64_t seed);

bool is_prime(std::uint32_t p);

/// Splits each key byte with an independent degree-(k-1) polynomial whose
/// constant term is the byte, evaluated at x = 1..n mod p.
std::vector<Share> split(const Keystream& key, const SharingParams& params,
                         const CoeffSource& coeffs);

/// Lagrange interpolation at x = 0 over any k of the given shares.
Keystream reconstruct(std::span<const Share> shares);

}  // namespace rotorcrypt
