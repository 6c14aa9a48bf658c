#include "rotorcrypt/chaos.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace rotorcrypt {

HenonState henon_iterate(const HenonState& state, const HenonParams& params) {
    HenonState next;
    next.x = 1.0 + state.y - params.a() * state.x * state.x;
    next.y = params.b() * state.x;
    next.n = state.n + 1;
    if (!std::isfinite(next.x) || !std::isfinite(next.y) ||
        std::fabs(next.x) > kHenonDivergenceLimit) {
        throw DivergenceError("Henon orbit diverged at iterate " + std::to_string(next.n));
    }
    return next;
}

std::uint8_t byte_from_coordinate(double x) {
    auto scaled = static_cast<long long>(std::floor(256.0 * x));
    long long m = scaled % 256;
    if (m < 0) m += 256;
    return static_cast<std::uint8_t>(m);
}

std::vector<std::uint8_t> henon_byte_sequence(std::uint8_t seed, std::size_t length) {
    HenonState state;
    state.x = (static_cast<double>(seed) - 127.5) / 1275.0;
    state.y = 0.0;

    constexpr int kBurnIn = 1000;
    for (int i = 0; i < kBurnIn; ++i) {
        state = henon_iterate(state);
    }

    std::vector<std::uint8_t> out;
    out.reserve(length);
    while (out.size() < length) {
        state = henon_iterate(state);
        out.push_back(byte_from_coordinate(state.x));
    }
    return out;
}

std::vector<int> complete_into_bijection(std::span<const int> raw, int domain) {
    if (std::cmp_not_equal(raw.size(), domain)) {
        throw Error("sequence length " + std::to_string(raw.size()) +
                    " does not match domain size " + std::to_string(domain));
    }
    for (int v : raw) {
        if (v < 0 || v >= domain) {
            throw Error("sequence value " + std::to_string(v) + " outside [0," +
                        std::to_string(domain - 1) + "]");
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(domain), false);
    std::vector<int> result(raw.begin(), raw.end());

    // First pass: keep first occurrences, mark later duplicates.
    std::vector<std::size_t> duplicate_slots;
    for (std::size_t i = 0; i < result.size(); ++i) {
        int v = result[i];
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
        } else {
            duplicate_slots.push_back(i);
        }
    }

    // Second pass: fill duplicate slots with missing values, ascending.
    int next_missing = 0;
    for (std::size_t slot : duplicate_slots) {
        while (seen[static_cast<std::size_t>(next_missing)]) ++next_missing;
        result[slot] = next_missing;
        seen[static_cast<std::size_t>(next_missing)] = true;
    }
    return result;
}

Permutation256 complete_permutation(std::span<const std::uint8_t> raw) {
    std::vector<int> widened(raw.begin(), raw.end());
    std::vector<int> fixed = complete_into_bijection(widened, 256);

    Permutation256 perm;
    for (std::size_t i = 0; i < 256; ++i) {
        perm.forward[i] = static_cast<std::uint8_t>(fixed[i]);
        perm.inverse[static_cast<std::size_t>(fixed[i])] = static_cast<std::uint8_t>(i);
    }
    return perm;
}

}  // namespace rotorcrypt
