#include "deft/augment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deft/errors.hpp"
#include "deft/rng.hpp"

namespace deft {

namespace {

constexpr double kBrightnessMax = 64.0;
constexpr double kContrastHalfRange = 0.5;
constexpr double kTranslateMax = 0.25;

std::uint8_t clamp_sample(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0l, 255l));
}

ImageU8 horizontal_flip(const ImageU8& img) {
  ImageU8 out(img.width, img.height, img.channels);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = img.at(img.width - 1 - x, y, c);
      }
    }
  }
  return out;
}

// One clockwise quarter turn; requires a square image.
ImageU8 quarter_turn(const ImageU8& img) {
  ImageU8 out(img.width, img.height, img.channels);
  const int n = img.width;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = img.at(y, n - 1 - x, c);
      }
    }
  }
  return out;
}

ImageU8 half_turn(const ImageU8& img) {
  ImageU8 out(img.width, img.height, img.channels);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = img.at(img.width - 1 - x, img.height - 1 - y, c);
      }
    }
  }
  return out;
}

ImageU8 rotate90(const ImageU8& img, int turns) {
  const bool square = img.width == img.height;
  if (!square && turns % 2 == 1) {
    turns = 2;  // keep the output dimensions equal to the input's
  }
  ImageU8 out = img;
  switch (turns % 4) {
    case 1:
      out = quarter_turn(out);
      break;
    case 2:
      out = half_turn(out);
      break;
    case 3:
      out = half_turn(quarter_turn(out));
      break;
    default:
      break;
  }
  return out;
}

ImageU8 brightness_shift(const ImageU8& img, double magnitude) {
  const long shift = std::lround(magnitude);
  ImageU8 out = img;
  for (auto& s : out.data) {
    s = clamp_sample(static_cast<double>(s) + static_cast<double>(shift));
  }
  return out;
}

ImageU8 contrast_scale(const ImageU8& img, double factor) {
  ImageU8 out = img;
  for (auto& s : out.data) {
    s = clamp_sample((static_cast<double>(s) - 128.0) * factor + 128.0);
  }
  return out;
}

ImageU8 translate(const ImageU8& img, double fraction) {
  const int dx = static_cast<int>(std::lround(fraction * img.width));
  const int dy = static_cast<int>(std::lround(fraction * img.height));
  ImageU8 out(img.width, img.height, img.channels);
  for (int y = 0; y < img.height; ++y) {
    const int sy = y - dy;
    if (sy < 0 || sy >= img.height) continue;
    for (int x = 0; x < img.width; ++x) {
      const int sx = x - dx;
      if (sx < 0 || sx >= img.width) continue;
      for (int c = 0; c < img.channels; ++c) {
        out.at(x, y, c) = img.at(sx, sy, c);
      }
    }
  }
  return out;
}

void check_magnitude(const AugmentationOp& op) {
  switch (op.kind) {
    case AugmentKind::kHorizontalFlip:
      break;
    case AugmentKind::kRotate90: {
      const long turns = std::lround(op.magnitude);
      if (turns < 1 || turns > 3) {
        throw InvalidArgumentError("rotate90: turns must be in [1, 3]");
      }
      break;
    }
    case AugmentKind::kBrightnessShift:
      if (std::abs(op.magnitude) > kBrightnessMax) {
        throw InvalidArgumentError("brightness-shift: magnitude exceeds 64");
      }
      break;
    case AugmentKind::kContrastScale:
      if (op.magnitude < 1.0 - kContrastHalfRange ||
          op.magnitude > 1.0 + kContrastHalfRange) {
        throw InvalidArgumentError(
            "contrast-scale: factor must be in [0.5, 1.5]");
      }
      break;
    case AugmentKind::kTranslate:
      if (std::abs(op.magnitude) > kTranslateMax) {
        throw InvalidArgumentError("translate: fraction exceeds 0.25");
      }
      break;
  }
}

void check_policy(const AugmentPolicy& policy) {
  if (policy.ops_per_image < 0) {
    throw InvalidArgumentError("augment policy: ops_per_image must be >= 0");
  }
  if (policy.magnitude_level < 0.0 || policy.magnitude_level > 1.0) {
    throw InvalidArgumentError(
        "augment policy: magnitude_level must be in [0, 1]");
  }
}

}  // namespace

ImageU8 apply_op(const ImageU8& img, const AugmentationOp& op) {
  check_magnitude(op);
  switch (op.kind) {
    case AugmentKind::kHorizontalFlip:
      return horizontal_flip(img);
    case AugmentKind::kRotate90:
      return rotate90(img, static_cast<int>(std::lround(op.magnitude)));
    case AugmentKind::kBrightnessShift:
      return brightness_shift(img, op.magnitude);
    case AugmentKind::kContrastScale:
      return contrast_scale(img, op.magnitude);
    case AugmentKind::kTranslate:
      return translate(img, op.magnitude);
  }
  throw InvalidArgumentError("unknown augmentation op");
}

std::vector<AugmentationOp> draw_ops(const AugmentPolicy& policy) {
  check_policy(policy);
  const double level = policy.magnitude_level;
  Rng rng(policy.seed);
  std::vector<AugmentationOp> ops;
  ops.reserve(static_cast<std::size_t>(policy.ops_per_image));
  for (int i = 0; i < policy.ops_per_image; ++i) {
    AugmentationOp op;
    op.kind = static_cast<AugmentKind>(rng.below(5));
    switch (op.kind) {
      case AugmentKind::kHorizontalFlip:
        op.magnitude = 0.0;
        break;
      case AugmentKind::kRotate90:
        op.magnitude = static_cast<double>(rng.below(3) + 1);
        break;
      case AugmentKind::kBrightnessShift:
        op.magnitude = rng.uniform(-kBrightnessMax * level,
                                   kBrightnessMax * level);
        break;
      case AugmentKind::kContrastScale:
        op.magnitude = rng.uniform(1.0 - kContrastHalfRange * level,
                                   1.0 + kContrastHalfRange * level);
        break;
      case AugmentKind::kTranslate:
        op.magnitude = rng.uniform(-kTranslateMax * level,
                                   kTranslateMax * level);
        break;
    }
    ops.push_back(op);
  }
  return ops;
}

ImageU8 apply_augment(const ImageU8& img, const AugmentPolicy& policy) {
  ImageU8 out = img;
  for (const AugmentationOp& op : draw_ops(policy)) {
    out = apply_op(out, op);
  }
  return out;
}

}  // namespace deft
