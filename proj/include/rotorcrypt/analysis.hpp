#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotorcrypt/imaging.hpp"

namespace rotorcrypt {

struct AnalysisReport {
    double entropy = 0.0;
    std::array<std::uint64_t, 256> histogram{};
    std::vector<double> column_means;
    std::optional<double> pixel_change_rate;

    std::string to_json() const;
    std::string histogram_csv() const;
};

/// Shannon entropy of the intensity distribution, in bits/pixel.
double entropy(const GrayImage& img);

std::array<std::uint64_t, 256> histogram(const GrayImage& img);

/// Per-column pixel means, profiled along the horizontal axis.
std::vector<double> column_means(const GrayImage& img);

/// Fraction of positions where the two images differ.
double pixel_change_rate(const GrayImage& a, const GrayImage& b);

AnalysisReport analyze(const GrayImage& img,
                       const GrayImage* compare = nullptr);

}  // namespace rotorcrypt
