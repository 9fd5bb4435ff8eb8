#include "deft/image.hpp"

#include <fstream>
#include <string>

#include "deft/errors.hpp"

namespace deft {

namespace {

void check_shape(int width, int height, int channels) {
  if (width <= 0 || height <= 0) {
    throw InvalidArgumentError("image dimensions must be positive");
  }
  if (channels != 1 && channels != 3) {
    throw InvalidArgumentError("image must have 1 or 3 channels");
  }
}

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    const char c = static_cast<char>(bytes[pos]);
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
    } else {
      break;
    }
  }
  std::string token;
  while (pos < bytes.size()) {
    const char c = static_cast<char>(bytes[pos]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#') break;
    token.push_back(c);
    ++pos;
  }
  if (token.empty()) {
    throw CodecError("malformed header: unexpected end of file");
  }
  return token;
}

int parse_header_int(std::span<const std::uint8_t> bytes, std::size_t& pos,
                     const char* what) {
  const std::string token = next_token(bytes, pos);
  int value = 0;
  for (const char c : token) {
    if (c < '0' || c > '9') {
      throw CodecError(std::string("malformed header: bad ") + what + " '" +
                       token + "'");
    }
    if (value > 1000000) {
      throw CodecError(std::string("malformed header: ") + what +
                       " out of range");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

ImageU8::ImageU8(int width, int height, int channels)
    : width(width), height(height), channels(channels) {
  check_shape(width, height, channels);
  data.assign(static_cast<std::size_t>(width) * height * channels, 0);
}

ImageU8::ImageU8(int width, int height, int channels,
                 std::vector<std::uint8_t> data)
    : width(width), height(height), channels(channels), data(std::move(data)) {
  check_shape(width, height, channels);
  const auto expected = static_cast<std::size_t>(width) * height * channels;
  if (this->data.size() != expected) {
    throw DimensionError("sample buffer length does not match image shape");
  }
}

ImageU8 decode_image(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  const std::string magic = next_token(bytes, pos);
  int channels = 0;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    throw CodecError("malformed header: expected P5 or P6, got '" + magic +
                     "'");
  }
  const int width = parse_header_int(bytes, pos, "width");
  const int height = parse_header_int(bytes, pos, "height");
  const int maxval = parse_header_int(bytes, pos, "maxval");
  if (width <= 0 || height <= 0) {
    throw CodecError("malformed header: non-positive dimensions");
  }
  if (maxval != 255) {
    throw CodecError("unsupported maxval " + std::to_string(maxval) +
                     " (only 255 is supported)");
  }
  // Exactly one whitespace byte separates the header from the payload.
  if (pos >= bytes.size()) {
    throw CodecError("truncated payload: missing samples");
  }
  const char sep = static_cast<char>(bytes[pos]);
  if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') {
    throw CodecError("malformed header: missing separator before payload");
  }
  ++pos;
  const auto expected = static_cast<std::size_t>(width) * height * channels;
  if (bytes.size() - pos < expected) {
    throw CodecError("truncated payload: expected " + std::to_string(expected) +
                     " samples, got " + std::to_string(bytes.size() - pos));
  }
  std::vector<std::uint8_t> data(bytes.begin() + pos,
                                 bytes.begin() + pos + expected);
  return ImageU8(width, height, channels, std::move(data));
}

std::vector<std::uint8_t> encode_image(const ImageU8& img) {
  check_shape(img.width, img.height, img.channels);
  const auto expected =
      static_cast<std::size_t>(img.width) * img.height * img.channels;
  if (img.data.size() != expected) {
    throw DimensionError("sample buffer length does not match image shape");
  }
  const std::string header = std::string(img.channels == 1 ? "P5" : "P6") +
                             "\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.data.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.data.begin(), img.data.end());
  return out;
}

ImageU8 load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CodecError("cannot open image file: " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_image(bytes);
  } catch (const CodecError& e) {
    throw CodecError(path.string() + ": " + e.what());
  }
}

void save_image(const ImageU8& img, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_image(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw CodecError("cannot open image file for writing: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw CodecError("failed to write image file: " + path.string());
  }
}

}  // namespace deft
