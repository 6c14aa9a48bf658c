#include <doctest.h>

#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "rotorcrypt/machine.hpp"

using namespace rotorcrypt;

namespace {

Permutation256 identity_wiring() {
    Permutation256 p;
    std::iota(p.forward.begin(), p.forward.end(), 0);
    std::iota(p.inverse.begin(), p.inverse.end(), 0);
    return p;
}

Machine identity_machine(std::array<std::uint8_t, 3> positions, std::uint8_t reflector) {
    std::array<Rotor, 3> rotors;
    for (std::size_t i = 0; i < 3; ++i) {
        rotors[i].wiring = identity_wiring();
        rotors[i].position = positions[i];
    }
    return Machine(std::move(rotors), reflector);
}

Keystream random_keystream(std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, 255);
    Keystream key;
    for (auto& b : key) b = static_cast<std::uint8_t>(dist(rng));
    return key;
}

}  // namespace

TEST_CASE("identical keystreams build identical machines") {
    Keystream key{10, 20, 30, 40, 50, 60, 70};
    Machine a(key), b(key);
    CHECK(a.positions() == b.positions());
    CHECK(a.reflector_offset() == b.reflector_offset());
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(a.rotors()[r].wiring.forward == b.rotors()[r].wiring.forward);
    }
}

TEST_CASE("K4 changes only the fast rotor position") {
    Keystream key{10, 20, 30, 40, 50, 60, 70};
    Keystream key2 = key;
    key2[3] = 41;
    Machine a(key), b(key2);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(a.rotors()[r].wiring.forward == b.rotors()[r].wiring.forward);
    }
    CHECK(a.positions()[0] != b.positions()[0]);
    CHECK(a.positions()[1] == b.positions()[1]);
    CHECK(a.positions()[2] == b.positions()[2]);
}

TEST_CASE("K1 changes rotor-1 wiring in at least half the entries") {
    Keystream key{10, 20, 30, 40, 50, 60, 70};
    Keystream key2 = key;
    key2[0] = 11;
    Machine a(key), b(key2);
    int diff = 0;
    for (std::size_t i = 0; i < 256; ++i) {
        if (a.rotors()[0].wiring.forward[i] != b.rotors()[0].wiring.forward[i]) ++diff;
    }
    CHECK(diff >= 128);
}

TEST_CASE("odometer stepping carries on wrap") {
    Machine m = identity_machine({255, 0, 0}, 0);
    m.step();
    CHECK(m.positions() == std::array<std::uint8_t, 3>{0, 1, 0});

    Machine m2 = identity_machine({255, 255, 7}, 0);
    m2.step();
    CHECK(m2.positions() == std::array<std::uint8_t, 3>{0, 0, 8});
}

TEST_CASE("full odometer period is 256^3") {
    Machine m = identity_machine({0, 0, 0}, 0);
    const std::uint64_t period = 256ULL * 256ULL * 256ULL;
    for (std::uint64_t i = 0; i < period; ++i) m.step();
    CHECK(m.positions() == std::array<std::uint8_t, 3>{0, 0, 0});
    CHECK(m.steps() == period);
}

TEST_CASE("steps counter stays consistent with positions") {
    Machine m = identity_machine({100, 200, 50}, 0);
    for (int i = 0; i < 70000; ++i) m.step();
    std::uint64_t s = m.steps();
    auto pos = m.positions();
    CHECK(pos[0] == static_cast<std::uint8_t>((100 + s) & 0xFF));
    std::uint64_t fast_wraps = (100 + s) / 256;
    CHECK(pos[1] == static_cast<std::uint8_t>((200 + fast_wraps) & 0xFF));
    std::uint64_t medium_wraps = (200 + fast_wraps) / 256;
    CHECK(pos[2] == static_cast<std::uint8_t>((50 + medium_wraps) & 0xFF));
}

TEST_CASE("identity wiring with zero reflector is the identity cipher") {
    Machine m = identity_machine({12, 34, 56}, 0);
    for (int p = 0; p < 256; ++p) {
        CHECK(m.encrypt_byte(static_cast<std::uint8_t>(p)) == p);
    }
}

TEST_CASE("identity wiring with reflector 128 adds 128, twice is identity") {
    for (int p = 0; p < 256; ++p) {
        Machine m = identity_machine({3, 9, 27}, 128);
        std::uint8_t c = m.encrypt_byte(static_cast<std::uint8_t>(p));
        CHECK(c == ((p + 128) & 0xFF));
        Machine m2 = identity_machine({3, 9, 27}, 128);
        CHECK(m2.encrypt_byte(c) == p);
    }
}

TEST_CASE("identity wiring decrypt subtracts the reflector offset") {
    for (int c = 0; c < 256; ++c) {
        Machine m = identity_machine({0, 0, 0}, 5);
        CHECK(m.decrypt_byte(static_cast<std::uint8_t>(c)) == ((c - 5 + 256) & 0xFF));
    }
}

// Four-pin sketch of a single rotor pass: rotation conjugates the
// wiring, so at offset 0 input pin i exits at forward[i].
TEST_CASE("four-pin rotor pass follows the wiring sequence") {
    // 0-based wiring of the sequence [3 2 1 4].
    std::array<int, 4> forward{2, 1, 0, 3};
    auto pass = [&](int idx, int offset) {
        return ((forward[static_cast<std::size_t>((idx + offset) % 4)] - offset) % 4 + 4) % 4;
    };
    CHECK(pass(0, 0) == 2);
    CHECK(pass(1, 0) == 1);
    CHECK(pass(2, 0) == 0);
    CHECK(pass(3, 0) == 3);
    // One full rotation restores the map.
    for (int i = 0; i < 4; ++i) {
        CHECK(pass(i, 4 % 4) == pass(i, 0));
    }
}

TEST_CASE("frozen substitution is a bijection for random keystreams") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Machine m(random_keystream(rng));
        for (int s = 0; s < 3; ++s) m.step();  // arbitrary state
        std::array<bool, 256> hit{};
        for (int p = 0; p < 256; ++p) {
            std::uint8_t c = m.substitute(static_cast<std::uint8_t>(p));
            CHECK(!hit[c]);
            hit[c] = true;
            CHECK(m.substitute_inverse(c) == p);
        }
    }
}

TEST_CASE("decrypt of encrypt round-trips byte streams") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    for (int trial = 0; trial < 20; ++trial) {
        Keystream key = random_keystream(rng);
        std::vector<std::uint8_t> plain(1000);
        for (auto& b : plain) b = static_cast<std::uint8_t>(byte_dist(rng));

        Machine enc(key), dec(key);
        for (std::uint8_t b : plain) {
            CHECK(dec.decrypt_byte(enc.encrypt_byte(b)) == b);
        }
    }
}

TEST_CASE("a shared machine stepped twice per byte does not round-trip") {
    std::mt19937 rng(13);
    int failures = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Keystream key = random_keystream(rng);
        Machine m(key);
        std::uint8_t p = 42;
        std::uint8_t c = m.encrypt_byte(p);
        if (m.decrypt_byte(c) != p) ++failures;
    }
    // Stepping between encrypt and decrypt desynchronizes the rotors;
    // round-trip through one machine fails for essentially all keys.
    CHECK(failures >= 9);
}
