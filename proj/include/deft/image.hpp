#ifndef DEFT_IMAGE_HPP
#define DEFT_IMAGE_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace deft {

/// 8-bit raster image. Samples are stored row-major and channel-interleaved;
/// channels is 1 (grayscale) or 3 (RGB). data.size() is always
/// width * height * channels.
struct ImageU8 {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  ImageU8() = default;

  /// Zero-filled image of the given shape.
  ImageU8(int width, int height, int channels);

  /// Takes ownership of an existing sample buffer; the buffer length must
  /// match the shape.
  ImageU8(int width, int height, int channels, std::vector<std::uint8_t> data);

  std::size_t sample_count() const { return data.size(); }

  bool same_shape(const ImageU8& other) const {
    return width == other.width && height == other.height &&
           channels == other.channels;
  }

  std::uint8_t& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

/// Parses a binary PGM ("P5", one channel) or PPM ("P6", three channels)
/// file. Only maxval 255 is supported; the header may contain '#' comments.
ImageU8 decode_image(std::span<const std::uint8_t> bytes);

/// Serializes to binary PGM or PPM with a canonical header
/// ("P5|P6\n<width> <height>\n255\n" followed by the raw samples).
std::vector<std::uint8_t> encode_image(const ImageU8& img);

ImageU8 load_image(const std::filesystem::path& path);
void save_image(const ImageU8& img, const std::filesystem::path& path);

}  // namespace deft

#endif  // DEFT_IMAGE_HPP
