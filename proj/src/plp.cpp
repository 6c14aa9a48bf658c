#include "rotorcrypt/plp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace rotorcrypt {

std::array<double, kSpectrumBins> power_spectrum(const VoiceFrame& frame) {
    // Direct DFT; 256 points is small enough that O(n^2) is immaterial.
    std::array<double, kSpectrumBins> power{};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(kFrameSize);
    for (std::size_t j = 0; j < kSpectrumBins; ++j) {
        double re = 0.0, im = 0.0;
        for (std::size_t t = 0; t < kFrameSize; ++t) {
            double angle = step * static_cast<double>(j) * static_cast<double>(t);
            re += frame.samples[t] * std::cos(angle);
            im -= frame.samples[t] * std::sin(angle);
        }
        power[j] = re * re + im * im;
    }
    return power;
}

double hz_to_bark(double f) {
    double z = 26.81 * f / (1960.0 + f) - 0.53;
    return std::max(z, 0.0);
}

std::array<double, kNumFilters> bark_filterbank(std::span<const double, kSpectrumBins> power,
                                                int sample_rate) {
    if (sample_rate < 200) {
        throw DegenerateBandError("sample rate " + std::to_string(sample_rate) +
                                  " Hz leaves no room for 14 bark filters");
    }
    const double nyquist = static_cast<double>(sample_rate) / 2.0;
    const double band = hz_to_bark(nyquist);
    const double spacing = band / static_cast<double>(kNumFilters + 1);

    std::array<double, kNumFilters> energies{};
    for (std::size_t j = 0; j < kSpectrumBins; ++j) {
        double f = static_cast<double>(j) * static_cast<double>(sample_rate) /
                   static_cast<double>(kFrameSize);
        double z = hz_to_bark(f);
        for (std::size_t m = 0; m < kNumFilters; ++m) {
            double center = spacing * static_cast<double>(m + 1);
            double w = 1.0 - std::fabs(z - center) / spacing;
            if (w > 0.0) {
                energies[m] += w * power[j];
            }
        }
    }
    return energies;
}

PlpCoefficients plp_coefficients(std::span<const double, kNumFilters> energies) {
    std::array<double, kNumFilters> compressed{};
    for (std::size_t m = 0; m < kNumFilters; ++m) {
        compressed[m] = std::cbrt(energies[m]);
    }

    PlpCoefficients coeffs{};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(kNumFilters);
    for (std::size_t m = 0; m < kNumFilters; ++m) {
        double acc = 0.0;
        for (std::size_t k = 0; k < kNumFilters; ++k) {
            acc += compressed[k] * std::cos(step * static_cast<double>(m * k));
        }
        coeffs[m] = acc / static_cast<double>(kNumFilters);
    }
    return coeffs;
}

std::array<std::size_t, 7> default_selection() {
    return {0, 1, 2, 3, 4, 5, 6};
}

Keystream derive_keystream(const PlpCoefficients& coeffs,
                           std::span<const std::size_t> selection) {
    if (selection.size() != 7) {
        throw SelectionError("expected 7 coefficient indices, got " +
                             std::to_string(selection.size()));
    }
    std::array<bool, kNumFilters> used{};
    Keystream key{};
    for (std::size_t i = 0; i < 7; ++i) {
        std::size_t idx = selection[i];
        if (idx >= kNumFilters) {
            throw SelectionError("coefficient index " + std::to_string(idx) +
                                 " out of range [0,13]");
        }
        if (used[idx]) {
            throw SelectionError("duplicate coefficient index " + std::to_string(idx));
        }
        used[idx] = true;
        auto scaled = static_cast<long long>(std::floor(std::fabs(coeffs[idx]) * 256.0));
        key[i] = static_cast<std::uint8_t>(((scaled % 256) + 256) % 256);
    }
    return key;
}

Keystream keystream_from_samples(std::span<const double> samples, std::size_t offset,
                                 int sample_rate, std::span<const std::size_t> selection) {
    if (samples.size() < offset + kFrameSize) {
        throw IoError("audio too short: need " + std::to_string(offset + kFrameSize) +
                      " samples, have " + std::to_string(samples.size()));
    }
    VoiceFrame frame;
    frame.sample_rate = sample_rate;
    std::copy_n(samples.begin() + static_cast<std::ptrdiff_t>(offset), kFrameSize,
                frame.samples.begin());

    auto power = power_spectrum(frame);
    auto energies = bark_filterbank(power, sample_rate);
    auto coeffs = plp_coefficients(energies);
    return derive_keystream(coeffs, selection);
}

}  // namespace rotorcrypt
