#pragma once

#include <array>
#include <cstdint>

#include "rotorcrypt/chaos.hpp"

namespace rotorcrypt {

/// The seven key bytes: K1..K3 wiring seeds, K4..K6 initial rotor
/// positions, K7 reflector offset.
using Keystream = std::array<std::uint8_t, 7>;

struct Rotor {
    Permutation256 wiring;
    std::uint8_t position = 0;
};

/// Three-rotor, 256-pin rotor machine. Rotor 0 is the fast rotor,
/// rotor 1 medium, rotor 2 slow. Mutable and strictly sequential:
/// every encrypt/decrypt call advances the odometer first.
class Machine {
public:
    /// Wirings from the Henon stream seeded by K1..K3, positions K4..K6,
    /// reflector offset K7.
    explicit Machine(const Keystream& key);

    /// Direct construction, mainly for degenerate-wiring tests.
    Machine(std::array<Rotor, 3> rotors, std::uint8_t reflector_offset);

    /// Advance the odometer by one: fast +1; a 255->0 wrap carries into
    /// the next rotor.
    void step();

    std::uint8_t encrypt_byte(std::uint8_t p);
    std::uint8_t decrypt_byte(std::uint8_t c);

    /// Substitution at the current positions, without stepping.
    std::uint8_t substitute(std::uint8_t p) const;
    std::uint8_t substitute_inverse(std::uint8_t c) const;

    std::array<std::uint8_t, 3> positions() const {
        return {rotors_[0].position, rotors_[1].position, rotors_[2].position};
    }
    std::uint8_t reflector_offset() const { return reflector_offset_; }
    std::uint64_t steps() const { return steps_; }
    const std::array<Rotor, 3>& rotors() const { return rotors_; }

private:
    int forward_pass(int idx) const;
    int backward_pass(int idx) const;

    std::array<Rotor, 3> rotors_;
    std::uint8_t reflector_offset_ = 0;
    std::uint64_t steps_ = 0;
};

}  // namespace rotorcrypt
