#include "rotorcrypt/sharing.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <utility>

namespace rotorcrypt {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

// Fermat inverse; p is prime and a is nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) {
        throw NonInvertibleError("zero has no inverse mod " + std::to_string(p));
    }
    return mod_pow(a, p - 2, p);
}

void validate_params(const SharingParams& params) {
    if (params.k < 2 || params.k > params.n) {
        throw MismatchedParamsError("need 2 <= k <= n, got k=" + std::to_string(params.k) +
                                    " n=" + std::to_string(params.n));
    }
    if (!is_prime(params.p)) {
        throw MismatchedParamsError("modulus " + std::to_string(params.p) + " is not prime");
    }
    if (static_cast<std::uint32_t>(params.n) >= params.p) {
        throw MismatchedParamsError("need n < p to place distinct evaluation points");
    }
}

}  // namespace

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

CoeffSource random_coeff_source() {
    auto rng = std::make_shared<std::mt19937_64>(std::random_device{}());
    return [rng](std::uint32_t p) {
        return std::uniform_int_distribution<std::uint32_t>(0, p - 1)(*rng);
    };
}

CoeffSource seeded_coeff_source(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](std::uint32_t p) {
        return std::uniform_int_distribution<std::uint32_t>(0, p - 1)(*rng);
    };
}

std::vector<Share> split(const Keystream& key, const SharingParams& params,
                         const CoeffSource& coeffs) {
    validate_params(params);
    for (std::uint8_t byte : key) {
        if (byte >= params.p) {
            throw SecretTooLargeError("key byte " + std::to_string(byte) +
                                      " does not fit in the field mod " +
                                      std::to_string(params.p) +
                                      "; use a larger prime (e.g. 257)");
        }
    }

    const auto p = static_cast<std::int64_t>(params.p);
    std::vector<Share> shares(static_cast<std::size_t>(params.n));
    for (int j = 0; j < params.n; ++j) {
        shares[static_cast<std::size_t>(j)].x = static_cast<std::uint8_t>(j + 1);
        shares[static_cast<std::size_t>(j)].params = params;
    }

    for (std::size_t byte_idx = 0; byte_idx < key.size(); ++byte_idx) {
        std::vector<std::int64_t> poly(static_cast<std::size_t>(params.k));
        poly[0] = key[byte_idx];
        for (int d = 1; d < params.k; ++d) {
            poly[static_cast<std::size_t>(d)] = coeffs(params.p);
        }
        for (int j = 1; j <= params.n; ++j) {
            // Horner evaluation at x = j.
            std::int64_t acc = 0;
            for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
                acc = (acc * j + *it) % p;
            }
            shares[static_cast<std::size_t>(j - 1)].values[byte_idx] =
                static_cast<std::uint16_t>(acc);
        }
    }
    return shares;
}

Keystream reconstruct(std::span<const Share> shares) {
    if (shares.empty()) {
        throw InsufficientSharesError("no shares given");
    }
    const SharingParams params = shares.front().params;
    validate_params(params);
    for (const Share& s : shares) {
        if (!(s.params == params)) {
            throw MismatchedParamsError("shares carry mismatched (n, k, p) parameters");
        }
    }
    if (std::cmp_less(shares.size(), params.k)) {
        throw InsufficientSharesError("need at least " + std::to_string(params.k) +
                                      " shares, got " + std::to_string(shares.size()));
    }

    // Use the first k shares; x values must be distinct.
    const auto k = static_cast<std::size_t>(params.k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (shares[i].x == shares[j].x) {
                throw MismatchedParamsError("duplicate share point x=" +
                                            std::to_string(shares[i].x));
            }
        }
    }

    const auto p = static_cast<std::int64_t>(params.p);
    // Lagrange basis weights at x = 0.
    std::vector<std::int64_t> weights(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::int64_t num = 1, den = 1;
        std::int64_t xj = shares[j].x;
        for (std::size_t m = 0; m < k; ++m) {
            if (m == j) continue;
            std::int64_t xm = shares[m].x;
            num = num * ((-xm % p) + p) % p;
            den = den * (((xj - xm) % p) + p) % p;
        }
        weights[j] = num * mod_inverse(den, p) % p;
    }

    Keystream key{};
    for (std::size_t byte_idx = 0; byte_idx < key.size(); ++byte_idx) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < k; ++j) {
            acc = (acc + weights[j] * shares[j].values[byte_idx]) % p;
        }
        key[byte_idx] = static_cast<std::uint8_t>(acc);
    }
    return key;
}

}  // namespace rotorcrypt
