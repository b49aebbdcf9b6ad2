// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include <zlib.h>

#include "biosig/encoders.hpp"
#include "biosig/error.hpp"
#include "biosig/matrix.hpp"
#include "biosig/time_frequency.hpp"

namespace biosig {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

enum class GrayMapping { linear_gray };

/// min -> 0, max -> 255, linear (rounded) in between; constant -> 128.
inline GrayImage to_gray(const Matrix<double>& m, GrayMapping = GrayMapping::linear_gray) {
  detail::require(!m.empty(), ErrorCode::EmptyInput, "cannot export an empty matrix");
  const auto [lo_it, hi_it] = std::minmax_element(m.flat().begin(), m.flat().end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  GrayImage img{m.cols(), m.rows(), std::vector<std::uint8_t>(m.size())};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(hi > lo)) {
      img.pixels[i] = 128;
      continue;
    }
    const double t = (m.flat()[i] - lo) / (hi - lo);
    img.pixels[i] = static_cast<std::uint8_t>(std::clamp(std::lround(t * 255.0), 0L, 255L));
  }
  return img;
}

/// Panels placed left to right; each panel is mapped with its own range.
inline GrayImage to_gray(const FusedImage& f) {
  const std::size_t n = f.size();
  GrayImage out{3 * n, n, std::vector<std::uint8_t>(3 * n * n)};
  for (std::size_t c = 0; c < 3; ++c) {
    const auto panel = to_gray(f.channels[c].values);
    for (std::size_t r = 0; r < n; ++r) {
      std::copy_n(panel.pixels.begin() + static_cast<std::ptrdiff_t>(r * n), n,
                  out.pixels.begin() + static_cast<std::ptrdiff_t>(r * 3 * n + c * n));
    }
  }
  return out;
}

/// Binary PGM (P5) bytes.
inline std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

namespace detail {

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

inline void put_chunk(std::vector<std::uint8_t>& out, const char* type, std::span<const std::uint8_t> data) {
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const auto crc = ::crc32(0L, out.data() + start, static_cast<uInt>(out.size() - start));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace detail

/// 8-bit grayscale PNG with the same pixel values as the PGM.
inline std::vector<std::uint8_t> encode_png(const GrayImage& img) {
  std::vector<std::uint8_t> out{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  std::vector<std::uint8_t> ihdr;
  detail::put_u32(ihdr, static_cast<std::uint32_t>(img.width));
  detail::put_u32(ihdr, static_cast<std::uint32_t>(img.height));
  ihdr.insert(ihdr.end(), {8, 0, 0, 0, 0});  // depth 8, grayscale, deflate, no filter, no interlace
  detail::put_chunk(out, "IHDR", ihdr);

  std::vector<std::uint8_t> raw;
  raw.reserve(img.height * (img.width + 1));
  for (std::size_t r = 0; r < img.height; ++r) {
    raw.push_back(0);
    const auto row = img.pixels.begin() + static_cast<std::ptrdiff_t>(r * img.width);
    raw.insert(raw.end(), row, row + static_cast<std::ptrdiff_t>(img.width));
  }
  uLongf packed_len = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> packed(packed_len);
  detail::require(compress2(packed.data(), &packed_len, raw.data(), static_cast<uLong>(raw.size()), 9) == Z_OK,
                  ErrorCode::IoFailure, "deflate failed");
  packed.resize(packed_len);
  detail::put_chunk(out, "IDAT", packed);
  detail::put_chunk(out, "IEND", {});
  return out;
}

/// Writes to a sibling temporary file, then renames over `path`.
inline void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  if (path.has_parent_path()) {
    std::error_code dir_ec;
    std::filesystem::create_directories(path.parent_path(), dir_ec);
    if (dir_ec) throw Error(ErrorCode::IoFailure, "cannot create '" + path.parent_path().string() + "': " + dir_ec.message());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write '" + tmp.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot rename onto '" + path.string() + "': " + ec.message());
}

inline void write_file_atomic(const std::filesystem::path& path, std::string_view text) {
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

enum class ImageFormat { pgm, png };

inline void export_image(const GrayImage& img, const std::filesystem::path& path,
                         ImageFormat format = ImageFormat::pgm) {
  write_file_atomic(path, format == ImageFormat::pgm ? encode_pgm(img) : encode_png(img));
}

inline void export_image(const EncodedImage& m, const std::filesystem::path& path,
                         ImageFormat format = ImageFormat::pgm, GrayMapping mapping = GrayMapping::linear_gray) {
  export_image(to_gray(m.values, mapping), path, format);
}

inline void export_image(const TimeFrequencyMap& m, const std::filesystem::path& path,
                         ImageFormat format = ImageFormat::pgm, GrayMapping mapping = GrayMapping::linear_gray) {
  export_image(to_gray(m.real(), mapping), path, format);
}

inline void export_image(const FusedImage& f, const std::filesystem::path& path,
                         ImageFormat format = ImageFormat::pgm) {
  export_image(to_gray(f), path, format);
}

/// Reads back a binary PGM written by encode_pgm.
inline GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open '" + path.string() + "'");
  std::string magic;
  std::size_t w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  detail::require(magic == "P5" && maxval == 255, ErrorCode::IoFailure, "not an 8-bit P5 file");
  in.get();
  GrayImage img{w, h, std::vector<std::uint8_t>(w * h)};
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  detail::require(static_cast<std::size_t>(in.gcount()) == img.pixels.size(), ErrorCode::IoFailure,
                  "truncated PGM");
  return img;
}

}  // namespace biosig
