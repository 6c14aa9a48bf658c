#include "rotorcrypt/imaging.hpp"

#include <algorithm>
#include <cmath>

namespace rotorcrypt {

GrayImage to_grayscale(const ColorImage& img) {
    GrayImage gray;
    gray.width = img.width;
    gray.height = img.height;
    gray.pixels.resize(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height));
    for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
        double r = img.pixels[3 * i];
        double g = img.pixels[3 * i + 1];
        double b = img.pixels[3 * i + 2];
        double y = std::floor(0.299 * r + 0.587 * g + 0.114 * b + 0.5);
        gray.pixels[i] = static_cast<std::uint8_t>(std::clamp(y, 0.0, 255.0));
    }
    return gray;
}

GrayImage encrypt_image(const Keystream& key, const GrayImage& img) {
    Machine machine(key);
    GrayImage out = img;
    for (std::uint8_t& px : out.pixels) {
        px = machine.encrypt_byte(px);
    }
    return out;
}

GrayImage decrypt_image(const Keystream& key, const GrayImage& img) {
    Machine machine(key);
    GrayImage out = img;
    for (std::uint8_t& px : out.pixels) {
        px = machine.decrypt_byte(px);
    }
    return out;
}

}  // namespace rotorcrypt
