#include "rotorcrypt/analysis.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace rotorcrypt {

double entropy(const GrayImage& img) {
    if (img.pixels.empty()) {
        throw EmptyImageError("entropy of an empty image is undefined");
    }
    auto counts = histogram(img);
    const double total = static_cast<double>(img.pixels.size());
    double h = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;  // 0 * log 0 = 0
        double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

std::array<std::uint64_t, 256> histogram(const GrayImage& img) {
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t px : img.pixels) {
        ++counts[px];
    }
    return counts;
}

std::vector<double> column_means(const GrayImage& img) {
    if (img.height < 1 || img.width < 1) {
        throw EmptyImageError("column means need at least one row and column");
    }
    std::vector<double> means(static_cast<std::size_t>(img.width), 0.0);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            means[static_cast<std::size_t>(x)] +=
                img.pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width) +
                           static_cast<std::size_t>(x)];
        }
    }
    for (double& m : means) {
        m /= static_cast<double>(img.height);
    }
    return means;
}

double pixel_change_rate(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DimensionMismatchError("pixel change rate needs equal dimensions");
    }
    if (a.pixels.empty()) return 0.0;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        if (a.pixels[i] != b.pixels[i]) ++diff;
    }
    return static_cast<double>(diff) / static_cast<double>(a.pixels.size());
}

AnalysisReport analyze(const GrayImage& img, const GrayImage* compare) {
    AnalysisReport report;
    report.entropy = entropy(img);
    report.histogram = histogram(img);
    report.column_means = column_means(img);
    if (compare != nullptr) {
        report.pixel_change_rate = pixel_change_rate(img, *compare);
    }
    return report;
}

std::string AnalysisReport::to_json() const {
    nlohmann::json j;
    j["entropy"] = entropy;
    j["histogram"] = histogram;
    j["column_means"] = column_means;
    if (pixel_change_rate.has_value()) {
        j["pixel_change_rate"] = *pixel_change_rate;
    } else {
        j["pixel_change_rate"] = nullptr;
    }
    return j.dump(2);
}

std::string AnalysisReport::histogram_csv() const {
    std::ostringstream out;
    out << "intensity,count\n";
    for (std::size_t v = 0; v < histogram.size(); ++v) {
        out << v << ',' << histogram[v] << '\n';
    }
    return out.str();
}

}  // namespace rotorcrypt
