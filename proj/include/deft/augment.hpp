#ifndef DEFT_AUGMENT_HPP
#define DEFT_AUGMENT_HPP

#include <cstdint>
#include <vector>

#include "deft/image.hpp"

namespace deft {

enum class AugmentKind {
  kHorizontalFlip,
  kRotate90,
  kBrightnessShift,
  kContrastScale,
  kTranslate,
};

/// One concrete transform. Every op preserves the image dimensions.
/// Magnitude ranges per kind:
///   horizontal-flip   magnitude ignored
///   rotate90          quarter turns, integer in [1, 3]; odd turns on a
///                     non-square image fall back to a half turn
///   brightness-shift  additive level shift in [-64, 64]
///   contrast-scale    scale about the mid level 128, factor in [0.5, 1.5]
///   translate         shift by the same signed fraction of width and
///                     height, in [-0.25, 0.25]; vacated pixels become 0
struct AugmentationOp {
  AugmentKind kind = AugmentKind::kHorizontalFlip;
  double magnitude = 0.0;
};

/// Seeded random-augmentation policy: ops_per_image ops are drawn uniformly
/// from the pool above, with magnitudes scaled by magnitude_level in [0, 1].
struct AugmentPolicy {
  int ops_per_image = 2;
  double magnitude_level = 1.0;
  std::uint64_t seed = 0;
};

/// Applies a single op. Throws InvalidArgumentError if the magnitude is
/// outside the declared range for its kind.
ImageU8 apply_op(const ImageU8& img, const AugmentationOp& op);

/// Draws the op sequence a policy produces (deterministic in policy.seed).
std::vector<AugmentationOp> draw_ops(const AugmentPolicy& policy);

/// Draws ops_per_image random ops from the pool and applies them in order.
/// Output dimensions equal input dimensions; identical (image, policy)
/// pairs give byte-identical outputs.
ImageU8 apply_augment(const ImageU8& img, const AugmentPolicy& policy);

}  // namespace deft

#endif  // DEFT_AUGMENT_HPP
