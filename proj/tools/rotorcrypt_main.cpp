#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotorcrypt/analysis.hpp"
#include "rotorcrypt/imaging.hpp"
#include "rotorcrypt/io.hpp"
#include "rotorcrypt/plp.hpp"
#include "rotorcrypt/sharing.hpp"

namespace fs = std::filesystem;
using namespace rotorcrypt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDomain = 3;

struct KeygenArgs {
    std::string wav;
    std::size_t offset = 0;
    std::vector<std::size_t> select;
    std::string out;
};

struct CipherArgs {
    std::string key;
    std::string in;
    std::string out;
};

struct SplitArgs {
    std::string key;
    int n = 5;
    int k = 3;
    std::uint32_t prime = 257;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
};

struct ReconstructArgs {
    std::vector<std::string> shares;
    std::string out;
};

struct AnalyzeArgs {
    std::string in;
    std::string compare;
    std::string report;
    std::string histogram_csv;
};

int run_keygen(const KeygenArgs& args) {
    io::WavAudio audio = io::read_wav(args.wav);
    std::vector<std::size_t> selection(args.select);
    if (selection.empty()) {
        auto def = default_selection();
        selection.assign(def.begin(), def.end());
    }
    Keystream key = keystream_from_samples(audio.samples, args.offset, audio.sample_rate,
                                           selection);
    io::write_key_file(key, args.out);
    std::cout << "keystream written to " << args.out << "\n";
    return kExitOk;
}

int run_cipher(const CipherArgs& args, bool decrypt) {
    Keystream key = io::read_key_file(args.key);
    GrayImage img = io::read_image_as_gray(args.in);
    GrayImage out = decrypt ? decrypt_image(key, img) : encrypt_image(key, img);
    io::write_pgm(out, args.out);
    std::cout << (decrypt ? "decrypted" : "encrypted") << " " << img.width << "x" << img.height
              << " image to " << args.out << "\n";
    return kExitOk;
}

int run_split(const SplitArgs& args) {
    Keystream key = io::read_key_file(args.key);
    SharingParams params{args.n, args.k, args.prime};
    CoeffSource coeffs =
        args.seed.has_value() ? seeded_coeff_source(*args.seed) : random_coeff_source();
    std::vector<Share> shares = split(key, params, coeffs);

    fs::create_directories(args.out_dir);
    for (const Share& share : shares) {
        fs::path path = fs::path(args.out_dir) /
                        ("share_" + std::to_string(static_cast<int>(share.x)) + ".rsh");
        io::write_share_file(share, path);
    }
    std::cout << "wrote " << shares.size() << " shares to " << args.out_dir << "\n";
    return kExitOk;
}

int run_reconstruct(const ReconstructArgs& args) {
    std::vector<Share> shares;
    shares.reserve(args.shares.size());
    for (const std::string& path : args.shares) {
        shares.push_back(io::read_share_file(path));
    }
    Keystream key = reconstruct(shares);
    io::write_key_file(key, args.out);
    std::cout << "keystream reconstructed from " << shares.size() << " shares into " << args.out
              << "\n";
    return kExitOk;
}

int run_analyze(const AnalyzeArgs& args) {
    GrayImage img = io::read_image_as_gray(args.in);
    std::optional<GrayImage> compare;
    if (!args.compare.empty()) {
        compare = io::read_image_as_gray(args.compare);
    }
    AnalysisReport report = analyze(img, compare ? &*compare : nullptr);
    io::atomic_write(args.report, report.to_json());
    if (!args.histogram_csv.empty()) {
        io::atomic_write(args.histogram_csv, report.histogram_csv());
    }
    std::cout << "report written to " << args.report << " (entropy " << report.entropy << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-based image cryptosystem: rotor-machine cipher with "
                 "chaotic wiring, voice-derived keys and threshold key sharing"};
    app.require_subcommand(1);

    KeygenArgs keygen_args;
    auto* keygen = app.add_subcommand("keygen", "Derive a 7-byte keystream from a WAV sample");
    keygen->add_option("--wav", keygen_args.wav, "Input WAV file (PCM 16-bit)")->required();
    keygen->add_option("--offset", keygen_args.offset, "Sample offset of the 256-sample frame");
    keygen->add_option("--select", keygen_args.select,
                       "7 distinct coefficient indices in [0,13] (default 0..6)")
        ->delimiter(',');
    keygen->add_option("--out", keygen_args.out, "Output key file")->required();

    CipherArgs encrypt_args;
    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a PGM/PPM image");
    encrypt->add_option("--key", encrypt_args.key, "Key file")->required();
    encrypt->add_option("--in", encrypt_args.in, "Plain image (P5, or P6 reduced to gray)")
        ->required();
    encrypt->add_option("--out", encrypt_args.out, "Cipher image (P5)")->required();

    CipherArgs decrypt_args;
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a PGM cipher image");
    decrypt->add_option("--key", decrypt_args.key, "Key file")->required();
    decrypt->add_option("--in", decrypt_args.in, "Cipher image (P5)")->required();
    decrypt->add_option("--out", decrypt_args.out, "Recovered image (P5)")->required();

    SplitArgs split_args;
    auto* split_cmd = app.add_subcommand("split", "Split a key file into threshold shares");
    split_cmd->add_option("--key", split_args.key, "Key file")->required();
    split_cmd->add_option("--n", split_args.n, "Number of shares (default 5)");
    split_cmd->add_option("--k", split_args.k, "Reconstruction threshold (default 3)");
    split_cmd->add_option("--prime", split_args.prime, "Field modulus (default 257)");
    split_cmd->add_option("--seed", split_args.seed,
                          "Deterministic coefficient seed (default: random)");
    split_cmd->add_option("--out-dir", split_args.out_dir, "Directory for share files")
        ->required();

    ReconstructArgs reconstruct_args;
    auto* reconstruct_cmd =
        app.add_subcommand("reconstruct", "Rebuild a key file from k or more shares");
    reconstruct_cmd->add_option("--share", reconstruct_args.shares, "Share file (repeatable)")
        ->required();
    reconstruct_cmd->add_option("--out", reconstruct_args.out, "Output key file")->required();

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Entropy/histogram/mean-value report");
    analyze_cmd->add_option("--in", analyze_args.in, "Image to analyze")->required();
    analyze_cmd->add_option("--compare", analyze_args.compare,
                            "Second image for the pixel change rate");
    analyze_cmd->add_option("--report", analyze_args.report, "Output JSON report")->required();
    analyze_cmd->add_option("--histogram-csv", analyze_args.histogram_csv,
                            "Also write the histogram as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (keygen->parsed()) return run_keygen(keygen_args);
        if (encrypt->parsed()) return run_cipher(encrypt_args, false);
        if (decrypt->parsed()) return run_cipher(decrypt_args, true);
        if (split_cmd->parsed()) return run_split(split_args);
        if (reconstruct_cmd->parsed()) return run_reconstruct(reconstruct_args);
        if (analyze_cmd->parsed()) return run_analyze(analyze_args);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
