#include "rotorcrypt/machine.hpp"

namespace rotorcrypt {

namespace {

// Rotation conjugates the wiring: add the offset, map, subtract the offset.
inline int through_wiring(const std::array<std::uint8_t, 256>& map, int idx, int offset) {
    int in = (idx + offset) & 0xFF;
    return (map[static_cast<std::size_t>(in)] - offset) & 0xFF;
}

}  // namespace

Machine::Machine(const Keystream& key) {
    for (int i = 0; i < 3; ++i) {
        rotors_[static_cast<std::size_t>(i)].wiring =
            complete_permutation(henon_byte_sequence(key[static_cast<std::size_t>(i)], 256));
        rotors_[static_cast<std::size_t>(i)].position = key[static_cast<std::size_t>(i) + 3];
    }
    reflector_offset_ = key[6];
}

Machine::Machine(std::array<Rotor, 3> rotors, std::uint8_t reflector_offset)
    : rotors_(std::move(rotors)), reflector_offset_(reflector_offset) {}

void Machine::step() {
    ++steps_;
    if (++rotors_[0].position == 0) {
        if (++rotors_[1].position == 0) {
            ++rotors_[2].position;
        }
    }
}

int Machine::forward_pass(int idx) const {
    for (const Rotor& r : rotors_) {
        idx = through_wiring(r.wiring.forward, idx, r.position);
    }
    return idx;
}

int Machine::backward_pass(int idx) const {
    for (auto it = rotors_.rbegin(); it != rotors_.rend(); ++it) {
        idx = through_wiring(it->wiring.inverse, idx, it->position);
    }
    return idx;
}

std::uint8_t Machine::substitute(std::uint8_t p) const {
    int idx = forward_pass(p);
    idx = (idx + reflector_offset_) & 0xFF;
    return static_cast<std::uint8_t>(backward_pass(idx));
}

std::uint8_t Machine::substitute_inverse(std::uint8_t c) const {
    int idx = forward_pass(c);
    idx = (idx - reflector_offset_) & 0xFF;
    return static_cast<std::uint8_t>(backward_pass(idx));
}

std::uint8_t Machine::encrypt_byte(std::uint8_t p) {
    step();
    return substitute(p);
}

std::uint8_t Machine::decrypt_byte(std::uint8_t c) {
    step();
    return substitute_inverse(c);
}

}  // namespace rotorcrypt
