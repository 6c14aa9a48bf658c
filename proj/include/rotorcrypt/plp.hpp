#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rotorcrypt/errors.hpp"
#include "rotorcrypt/machine.hpp"

namespace rotorcrypt {

inline constexpr std::size_t kFrameSize = 256;
inline constexpr std::size_t kNumFilters = 14;
inline constexpr std::size_t kSpectrumBins = kFrameSize / 2 + 1;

struct VoiceFrame {
    std::array<double, kFrameSize> samples{};
    int sample_rate = 0;
};

using PlpCoefficients = std::array<double, kNumFilters>;

/// One-sided power spectrum of the 256-point DFT: |X[j]|^2, j = 0..128.
/// No window, no pre-emphasis.
std::array<double, kSpectrumBins> power_spectrum(const VoiceFrame& frame);

/// Traunmueller Hz->Bark conversion, clamped below at 0.
double hz_to_bark(double f);

/// 14 triangular filters with centers equally spaced on [0, bark(Nyquist)],
/// spacing bark(Nyquist)/15, each base spanning twice the spacing
/// (50% overlap with each neighbour).
std::array<double, kNumFilters> bark_filterbank(std::span<const double, kSpectrumBins> power,
                                                int sample_rate);

/// Cube-root compression followed by the real part of a 14-point
/// inverse DFT.
PlpCoefficients plp_coefficients(std::span<const double, kNumFilters> energies);

/// K = floor(|c| * 256) mod 256 for each of the 7 selected coefficients.
Keystream derive_keystream(const PlpCoefficients& coeffs,
                           std::span<const std::size_t> selection);

/// Default selection: coefficients 0..6.
std::array<std::size_t, 7> default_selection();

/// Full pipeline: frame at `offset` from a normalized sample stream.
Keystream keystream_from_samples(std::span<const double> samples, std::size_t offset,
                                 int sample_rate, std::span<const std::size_t> selection);

}  // namespace rotorcrypt
