#pragma once

#include <cstdint>
#include <vector>

#include "rotorcrypt/errors.hpp"
#include "rotorcrypt/machine.hpp"

namespace rotorcrypt {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, width*height bytes

    bool operator==(const GrayImage&) const = default;
};

struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major RGB triples
};

/// BT.601 luma, round half up: y = round(0.299 R + 0.587 G + 0.114 B).
GrayImage to_grayscale(const ColorImage& img);

/// Builds a fresh machine from the key and streams pixels through it in
/// row-major order. Dimensions are preserved.
GrayImage encrypt_image(const Keystream& key, const GrayImage& img);
GrayImage decrypt_image(const Keystream& key, const GrayImage& img);

}  // namespace rotorcrypt
