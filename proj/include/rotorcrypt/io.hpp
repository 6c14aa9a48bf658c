#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rotorcrypt/imaging.hpp"
#include "rotorcrypt/machine.hpp"
#include "rotorcrypt/sharing.hpp"

namespace rotorcrypt::io {

/// Binary PGM (P5, maxval 255).
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

/// Binary PPM (P6, maxval 255), for color input.
ColorImage read_ppm(const std::filesystem::path& path);

/// Reads P5 directly or P6 reduced to grayscale.
GrayImage read_image_as_gray(const std::filesystem::path& path);

struct WavAudio {
    int sample_rate = 0;
    std::vector<double> samples;  // first channel, normalized by 1/32768
};

/// PCM 16-bit signed little-endian WAV; other encodings are an IoError.
WavAudio read_wav(const std::filesystem::path& path);

/// Key file: magic "RKEY", u8 version = 1, 7 key bytes.
Keystream read_key_file(const std::filesystem::path& path);
void write_key_file(const Keystream& key, const std::filesystem::path& path);

/// Share file: magic "RSH1", u16 p, u8 n, u8 k, u8 x, 7 x u16 values.
/// All little-endian.
Share read_share_file(const std::filesystem::path& path);
void write_share_file(const Share& share, const std::filesystem::path& path);

/// Writes to a temporary sibling, then renames into place.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

}  // namespace rotorcrypt::io
