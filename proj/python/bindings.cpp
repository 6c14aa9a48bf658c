#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "rotorcrypt/analysis.hpp"
#include "rotorcrypt/chaos.hpp"
#include "rotorcrypt/imaging.hpp"
#include "rotorcrypt/io.hpp"
#include "rotorcrypt/machine.hpp"
#include "rotorcrypt/plp.hpp"
#include "rotorcrypt/sharing.hpp"

namespace py = pybind11;
using namespace rotorcrypt;

namespace {

Keystream key_from_bytes(const py::bytes& raw) {
    std::string data = raw;
    if (data.size() != 7) {
        throw std::invalid_argument("keystream must be exactly 7 bytes");
    }
    Keystream key{};
    for (std::size_t i = 0; i < 7; ++i) {
        key[i] = static_cast<std::uint8_t>(data[i]);
    }
    return key;
}

GrayImage image_from_bytes(const py::bytes& pixels, int width, int height) {
    std::string data = pixels;
    if (data.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("pixel buffer does not match width*height");
    }
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(data.begin(), data.end());
    return img;
}

py::bytes bytes_from_vector(const std::vector<std::uint8_t>& data) {
    return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

}  // namespace

PYBIND11_MODULE(_rotorcrypt, m) {
    m.doc() = "Rotor-machine image cipher with chaotic wiring and threshold key sharing";

    py::register_exception<Error>(m, "RotorcryptError");

    m.def("henon_byte_sequence",
          [](int seed, std::size_t length) {
              if (seed < 0 || seed > 255) throw std::invalid_argument("seed must be a byte");
              return bytes_from_vector(
                  henon_byte_sequence(static_cast<std::uint8_t>(seed), length));
          },
          py::arg("seed"), py::arg("length"));

    m.def("complete_permutation",
          [](const py::bytes& raw) {
              std::string data = raw;
              std::vector<std::uint8_t> widened(data.begin(), data.end());
              Permutation256 perm = complete_permutation(widened);
              return py::bytes(reinterpret_cast<const char*>(perm.forward.data()), 256);
          },
          py::arg("raw"));

    m.def("encrypt_image",
          [](const py::bytes& key, const py::bytes& pixels, int width, int height) {
              GrayImage out =
                  encrypt_image(key_from_bytes(key), image_from_bytes(pixels, width, height));
              return bytes_from_vector(out.pixels);
          },
          py::arg("key"), py::arg("pixels"), py::arg("width"), py::arg("height"));

    m.def("decrypt_image",
          [](const py::bytes& key, const py::bytes& pixels, int width, int height) {
              GrayImage out =
                  decrypt_image(key_from_bytes(key), image_from_bytes(pixels, width, height));
              return bytes_from_vector(out.pixels);
          },
          py::arg("key"), py::arg("pixels"), py::arg("width"), py::arg("height"));

    m.def("keystream_from_wav",
          [](const std::string& path, std::size_t offset,
             std::optional<std::vector<std::size_t>> selection) {
              io::WavAudio audio = io::read_wav(path);
              std::vector<std::size_t> sel;
              if (selection) {
                  sel = *selection;
              } else {
                  auto def = default_selection();
                  sel.assign(def.begin(), def.end());
              }
              Keystream key =
                  keystream_from_samples(audio.samples, offset, audio.sample_rate, sel);
              return py::bytes(reinterpret_cast<const char*>(key.data()), key.size());
          },
          py::arg("path"), py::arg("offset") = 0, py::arg("selection") = py::none());

    m.def("split_key",
          [](const py::bytes& key, int n, int k, std::uint32_t prime,
             std::optional<std::uint64_t> seed) {
              CoeffSource coeffs = seed ? seeded_coeff_source(*seed) : random_coeff_source();
              std::vector<Share> shares = split(key_from_bytes(key), {n, k, prime}, coeffs);
              py::list out;
              for (const Share& s : shares) {
                  py::dict d;
                  d["x"] = s.x;
                  d["values"] = std::vector<int>(s.values.begin(), s.values.end());
                  d["n"] = s.params.n;
                  d["k"] = s.params.k;
                  d["p"] = s.params.p;
                  out.append(d);
              }
              return out;
          },
          py::arg("key"), py::arg("n") = 5, py::arg("k") = 3, py::arg("prime") = 257,
          py::arg("seed") = py::none());

    m.def("reconstruct_key",
          [](const py::list& share_dicts) {
              std::vector<Share> shares;
              for (const auto& item : share_dicts) {
                  py::dict d = item.cast<py::dict>();
                  Share s;
                  s.x = d["x"].cast<std::uint8_t>();
                  auto values = d["values"].cast<std::vector<int>>();
                  if (values.size() != 7) throw std::invalid_argument("share needs 7 values");
                  for (std::size_t i = 0; i < 7; ++i) {
                      s.values[i] = static_cast<std::uint16_t>(values[i]);
                  }
                  s.params.n = d["n"].cast<int>();
                  s.params.k = d["k"].cast<int>();
                  s.params.p = d["p"].cast<std::uint32_t>();
                  shares.push_back(s);
              }
              Keystream key = reconstruct(shares);
              return py::bytes(reinterpret_cast<const char*>(key.data()), key.size());
          },
          py::arg("shares"));

    m.def("entropy",
          [](const py::bytes& pixels, int width, int height) {
              return entropy(image_from_bytes(pixels, width, height));
          },
          py::arg("pixels"), py::arg("width"), py::arg("height"));

    m.def("histogram",
          [](const py::bytes& pixels, int width, int height) {
              auto counts = histogram(image_from_bytes(pixels, width, height));
              return std::vector<std::uint64_t>(counts.begin(), counts.end());
          },
          py::arg("pixels"), py::arg("width"), py::arg("height"));

    m.def("column_means",
          [](const py::bytes& pixels, int width, int height) {
              return column_means(image_from_bytes(pixels, width, height));
          },
          py::arg("pixels"), py::arg("width"), py::arg("height"));

    m.def("pixel_change_rate",
          [](const py::bytes& a, const py::bytes& b, int width, int height) {
              return pixel_change_rate(image_from_bytes(a, width, height),
                                       image_from_bytes(b, width, height));
          },
          py::arg("a"), py::arg("b"), py::arg("width"), py::arg("height"));
}
