#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "rotorcrypt/sharing.hpp"

using namespace rotorcrypt;

namespace {

// Direct polynomial evaluation oracle for f(x) = a0 + a1 x + a2 x^2 mod p.
int eval_quadratic(int a0, int a1, int a2, int x, int p) {
    return ((a0 + a1 * x + a2 * x * x) % p + p) % p;
}

CoeffSource fixed_coeffs(std::vector<std::uint32_t> values) {
    auto idx = std::make_shared<std::size_t>(0);
    auto vals = std::make_shared<std::vector<std::uint32_t>>(std::move(values));
    return [idx, vals](std::uint32_t) { return (*vals)[(*idx)++ % vals->size()]; };
}

Keystream random_keystream(std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, 255);
    Keystream key;
    for (auto& b : key) b = static_cast<std::uint8_t>(dist(rng));
    return key;
}

}  // namespace

TEST_CASE("worked example at p=17: shares and reconstruction") {
    // Secret byte 5 with a1=3, a2=2 in every polynomial.
    Keystream key{5, 5, 5, 5, 5, 5, 5};
    SharingParams params{5, 3, 17};
    auto shares = split(key, params, fixed_coeffs({3, 2}));

    std::array<int, 5> expected{10, 2, 15, 15, 2};
    for (int j = 0; j < 5; ++j) {
        CHECK(shares[static_cast<std::size_t>(j)].x == j + 1);
        for (std::size_t b = 0; b < 7; ++b) {
            CHECK(shares[static_cast<std::size_t>(j)].values[b] ==
                  expected[static_cast<std::size_t>(j)]);
        }
        CHECK(expected[static_cast<std::size_t>(j)] == eval_quadratic(5, 3, 2, j + 1, 17));
    }

    std::vector<Share> subset{shares[0], shares[1], shares[2]};
    Keystream back = reconstruct(subset);
    CHECK(back == key);
}

TEST_CASE("every 3-subset of the worked example reconstructs the secret") {
    Keystream key{5, 5, 5, 5, 5, 5, 5};
    auto shares = split(key, {5, 3, 17}, fixed_coeffs({3, 2}));
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            for (std::size_t k = j + 1; k < 5; ++k) {
                std::vector<Share> subset{shares[i], shares[j], shares[k]};
                CHECK(reconstruct(subset) == key);
            }
        }
    }
}

TEST_CASE("constant polynomial shares all equal the secret") {
    Keystream key{9, 9, 9, 9, 9, 9, 9};
    auto shares = split(key, {5, 3, 17}, fixed_coeffs({0}));
    for (const Share& s : shares) {
        for (std::uint16_t v : s.values) CHECK(v == 9);
    }
    std::vector<Share> subset{shares[1], shares[3], shares[4]};
    CHECK(reconstruct(subset) == key);
}

TEST_CASE("secret zero stays zero") {
    Keystream key{};
    auto shares = split(key, {5, 3, 17}, fixed_coeffs({7, 13}));
    std::vector<Share> subset{shares[0], shares[2], shares[4]};
    CHECK(reconstruct(subset) == key);
}

TEST_CASE("split rejects key bytes outside the field") {
    Keystream key{16, 0, 0, 0, 0, 0, 200};
    CHECK_THROWS_AS(split(key, {5, 3, 17}, fixed_coeffs({1})), SecretTooLargeError);
}

TEST_CASE("reconstruct over random k-subsets at p=257") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        Keystream key = random_keystream(rng);
        auto shares = split(key, {5, 3, 257}, seeded_coeff_source(rng()));
        std::shuffle(shares.begin(), shares.end(), rng);
        std::vector<Share> subset(shares.begin(), shares.begin() + 3);
        CHECK(reconstruct(subset) == key);
    }
}

TEST_CASE("all subsets of size >= k reconstruct at p=257") {
    std::mt19937 rng(103);
    Keystream key = random_keystream(rng);
    auto shares = split(key, {5, 3, 257}, seeded_coeff_source(42));
    // Every subset of size 3, 4, 5 via bitmask.
    for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<Share> subset;
        for (unsigned bit = 0; bit < 5; ++bit) {
            if (mask & (1u << bit)) subset.push_back(shares[bit]);
        }
        if (subset.size() >= 3) {
            CHECK(reconstruct(subset) == key);
        }
    }
}

TEST_CASE("two shares are consistent with every candidate secret at p=17") {
    // Perfect secrecy at the threshold boundary: brute force over the
    // 17^2 coefficient pairs.
    Keystream key{11, 0, 0, 0, 0, 0, 0};
    auto shares = split(key, {5, 3, 17}, fixed_coeffs({4, 9}));
    int y1 = shares[0].values[0];
    int y2 = shares[1].values[0];
    for (int candidate = 0; candidate < 17; ++candidate) {
        bool consistent = false;
        for (int a1 = 0; a1 < 17 && !consistent; ++a1) {
            for (int a2 = 0; a2 < 17 && !consistent; ++a2) {
                if (eval_quadratic(candidate, a1, a2, 1, 17) == y1 &&
                    eval_quadratic(candidate, a1, a2, 2, 17) == y2) {
                    consistent = true;
                }
            }
        }
        CHECK(consistent);
    }
}

TEST_CASE("error paths") {
    Keystream key{1, 2, 3, 4, 5, 6, 7};
    auto shares = split(key, {5, 3, 257}, seeded_coeff_source(1));

    std::vector<Share> too_few{shares[0], shares[1]};
    CHECK_THROWS_AS(reconstruct(too_few), InsufficientSharesError);

    std::vector<Share> mismatched{shares[0], shares[1], shares[2]};
    mismatched[2].params.p = 263;
    CHECK_THROWS_AS(reconstruct(mismatched), MismatchedParamsError);

    std::vector<Share> duplicated{shares[0], shares[1], shares[1]};
    CHECK_THROWS_AS(reconstruct(duplicated), MismatchedParamsError);

    CHECK_THROWS_AS(split(key, {5, 3, 256}, seeded_coeff_source(1)), MismatchedParamsError);
    CHECK_THROWS_AS(split(key, {5, 6, 257}, seeded_coeff_source(1)), MismatchedParamsError);
    CHECK_THROWS_AS(split(key, {5, 1, 257}, seeded_coeff_source(1)), MismatchedParamsError);
}

TEST_CASE("share values and points stay inside the field") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        Keystream key = random_keystream(rng);
        auto shares = split(key, {5, 3, 257}, seeded_coeff_source(rng()));
        for (const Share& s : shares) {
            CHECK(s.x >= 1);
            CHECK(s.x < 257);
            for (std::uint16_t v : s.values) CHECK(v < 257);
        }
    }
}
