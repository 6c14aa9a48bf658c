#include "rotorcrypt/io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

namespace rotorcrypt::io {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Netpbm header token, skipping whitespace and '#' comments.
std::string next_token(const std::string& data, std::size_t& pos) {
    while (pos < data.size()) {
        char c = data[pos];
        if (c == '#') {
            while (pos < data.size() && data[pos] != '\n') ++pos;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else {
            break;
        }
    }
    std::size_t start = pos;
    while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
    if (start == pos) {
        throw IoError("truncated netpbm header");
    }
    return data.substr(start, pos - start);
}

struct NetpbmHeader {
    std::string magic;
    int width = 0;
    int height = 0;
    std::size_t data_offset = 0;
};

NetpbmHeader parse_netpbm_header(const std::string& data, const std::filesystem::path& path) {
    std::size_t pos = 0;
    NetpbmHeader h;
    h.magic = next_token(data, pos);
    h.width = std::stoi(next_token(data, pos));
    h.height = std::stoi(next_token(data, pos));
    int maxval = std::stoi(next_token(data, pos));
    if (h.width < 0 || h.height < 0) {
        throw IoError(path.string() + ": negative image dimensions");
    }
    if (maxval != 255) {
        throw IoError(path.string() + ": only maxval 255 is supported, got " +
                      std::to_string(maxval));
    }
    // Exactly one whitespace byte separates the header from pixel data.
    h.data_offset = pos + 1;
    return h;
}

std::uint16_t read_u16le(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0] | (p[1] << 8) | (p[2] << 16) |
                                      (static_cast<std::uint32_t>(p[3]) << 24));
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::string data = read_file(path);
    NetpbmHeader h = parse_netpbm_header(data, path);
    if (h.magic != "P5") {
        throw IoError(path.string() + ": expected binary PGM (P5), got " + h.magic);
    }
    std::size_t count = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    if (data.size() < h.data_offset + count) {
        throw IoError(path.string() + ": truncated pixel data");
    }
    GrayImage img;
    img.width = h.width;
    img.height = h.height;
    img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(h.data_offset),
                      data.begin() + static_cast<std::ptrdiff_t>(h.data_offset + count));
    return img;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    atomic_write(path, out.str());
}

ColorImage read_ppm(const std::filesystem::path& path) {
    std::string data = read_file(path);
    NetpbmHeader h = parse_netpbm_header(data, path);
    if (h.magic != "P6") {
        throw IoError(path.string() + ": expected binary PPM (P6), got " + h.magic);
    }
    std::size_t count = 3 * static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    if (data.size() < h.data_offset + count) {
        throw IoError(path.string() + ": truncated pixel data");
    }
    ColorImage img;
    img.width = h.width;
    img.height = h.height;
    img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(h.data_offset),
                      data.begin() + static_cast<std::ptrdiff_t>(h.data_offset + count));
    return img;
}

GrayImage read_image_as_gray(const std::filesystem::path& path) {
    std::string data = read_file(path);
    if (data.size() >= 2 && data[0] == 'P' && data[1] == '6') {
        return to_grayscale(read_ppm(path));
    }
    return read_pgm(path);
}

WavAudio read_wav(const std::filesystem::path& path) {
    std::string raw = read_file(path);
    const auto* p = reinterpret_cast<const unsigned char*>(raw.data());
    if (raw.size() < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0) {
        throw IoError(path.string() + ": not a RIFF/WAVE file");
    }

    WavAudio audio;
    int channels = 0;
    int bits_per_sample = 0;
    bool have_fmt = false;

    std::size_t pos = 12;
    while (pos + 8 <= raw.size()) {
        std::string chunk_id(raw, pos, 4);
        std::uint32_t chunk_size = read_u32le(p + pos + 4);
        std::size_t body = pos + 8;
        if (body + chunk_size > raw.size()) {
            throw IoError(path.string() + ": truncated chunk " + chunk_id);
        }
        if (chunk_id == "fmt ") {
            if (chunk_size < 16) {
                throw IoError(path.string() + ": malformed fmt chunk");
            }
            int format = read_u16le(p + body);
            channels = read_u16le(p + body + 2);
            audio.sample_rate = static_cast<int>(read_u32le(p + body + 4));
            bits_per_sample = read_u16le(p + body + 14);
            if (format != 1) {
                throw IoError(path.string() + ": unsupported WAV encoding " +
                              std::to_string(format) + " (need PCM)");
            }
            if (bits_per_sample != 16) {
                throw IoError(path.string() + ": unsupported sample width " +
                              std::to_string(bits_per_sample) + " (need 16-bit)");
            }
            have_fmt = true;
        } else if (chunk_id == "data") {
            if (!have_fmt) {
                throw IoError(path.string() + ": data chunk before fmt chunk");
            }
            std::size_t frame_bytes = static_cast<std::size_t>(channels) * 2;
            std::size_t frames = chunk_size / frame_bytes;
            audio.samples.reserve(frames);
            for (std::size_t i = 0; i < frames; ++i) {
                auto v = static_cast<std::int16_t>(read_u16le(p + body + i * frame_bytes));
                audio.samples.push_back(static_cast<double>(v) / 32768.0);
            }
            return audio;
        }
        pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
    }
    throw IoError(path.string() + ": no data chunk found");
}

Keystream read_key_file(const std::filesystem::path& path) {
    std::string data = read_file(path);
    if (data.size() != 12 || data.compare(0, 4, "RKEY") != 0) {
        throw IoError(path.string() + ": not a key file (bad magic or size)");
    }
    if (data[4] != 1) {
        throw IoError(path.string() + ": unsupported key file version " +
                      std::to_string(static_cast<int>(data[4])));
    }
    Keystream key{};
    for (std::size_t i = 0; i < 7; ++i) {
        key[i] = static_cast<std::uint8_t>(data[5 + i]);
    }
    return key;
}

void write_key_file(const Keystream& key, const std::filesystem::path& path) {
    std::string data = "RKEY";
    data.push_back(1);
    for (std::uint8_t b : key) {
        data.push_back(static_cast<char>(b));
    }
    atomic_write(path, data);
}

Share read_share_file(const std::filesystem::path& path) {
    std::string data = read_file(path);
    constexpr std::size_t kShareFileSize = 4 + 2 + 3 + 14;
    if (data.size() != kShareFileSize || data.compare(0, 4, "RSH1") != 0) {
        throw IoError(path.string() + ": not a share file (bad magic or size)");
    }
    const auto* p = reinterpret_cast<const unsigned char*>(data.data());
    Share share;
    share.params.p = read_u16le(p + 4);
    share.params.n = p[6];
    share.params.k = p[7];
    share.x = p[8];
    for (std::size_t i = 0; i < 7; ++i) {
        share.values[i] = read_u16le(p + 9 + 2 * i);
    }
    return share;
}

void write_share_file(const Share& share, const std::filesystem::path& path) {
    std::string data = "RSH1";
    data.push_back(static_cast<char>(share.params.p & 0xFF));
    data.push_back(static_cast<char>((share.params.p >> 8) & 0xFF));
    data.push_back(static_cast<char>(share.params.n));
    data.push_back(static_cast<char>(share.params.k));
    data.push_back(static_cast<char>(share.x));
    for (std::uint16_t v : share.values) {
        data.push_back(static_cast<char>(v & 0xFF));
        data.push_back(static_cast<char>((v >> 8) & 0xFF));
    }
    atomic_write(path, data);
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw IoError("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

}  // namespace rotorcrypt::io
