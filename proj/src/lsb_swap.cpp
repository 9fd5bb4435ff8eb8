#include "deft/lsb_swap.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>

#include "deft/errors.hpp"
#include "deft/rng.hpp"

namespace deft {

namespace {

void swap_pair_in_place(ImageU8& a, ImageU8& b, std::uint8_t low_mask) {
  const std::uint8_t high_mask = static_cast<std::uint8_t>(~low_mask);
  const std::size_t n = a.data.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t sa = a.data[i];
    const std::uint8_t sb = b.data[i];
    a.data[i] = static_cast<std::uint8_t>((sa & high_mask) | (sb & low_mask));
    b.data[i] = static_cast<std::uint8_t>((sb & high_mask) | (sa & low_mask));
  }
}

std::uint8_t low_mask_for(int k) {
  if (k < 0 || k > 8) {
    throw InvalidArgumentError("lsb_swap: k must be in [0, 8], got " +
                               std::to_string(k));
  }
  return k == 8 ? 0xffu : static_cast<std::uint8_t>((1u << k) - 1u);
}

// Shuffles `indices` and swaps consecutive entries pairwise; an odd
// leftover keeps its original samples.
void swap_group(std::vector<ImageU8>& out, std::vector<std::size_t>& indices,
                std::uint8_t low_mask, Rng& rng) {
  rng.shuffle(indices);
  for (std::size_t i = 0; i + 1 < indices.size(); i += 2) {
    swap_pair_in_place(out[indices[i]], out[indices[i + 1]], low_mask);
  }
}

}  // namespace

std::pair<ImageU8, ImageU8> lsb_swap(const ImageU8& a, const ImageU8& b,
                                     int k) {
  const std::uint8_t low_mask = low_mask_for(k);
  if (!a.same_shape(b)) {
    throw DimensionError("lsb_swap: images have different shapes");
  }
  std::pair<ImageU8, ImageU8> out(a, b);
  swap_pair_in_place(out.first, out.second, low_mask);
  return out;
}

std::vector<ImageU8> lsb_swap_corpus(std::span<const ImageU8> images, int k,
                                     std::uint64_t pairing_seed) {
  return lsb_swap_corpus(images, {}, false, k, pairing_seed);
}

std::vector<ImageU8> lsb_swap_corpus(std::span<const ImageU8> images,
                                     std::span<const int> labels,
                                     bool same_class_only, int k,
                                     std::uint64_t pairing_seed) {
  const std::uint8_t low_mask = low_mask_for(k);
  if (images.size() < 2) {
    throw InvalidArgumentError(
        "lsb_swap_corpus: need at least 2 images, got " +
        std::to_string(images.size()));
  }
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (!images[i].same_shape(images[0])) {
      throw DimensionError("lsb_swap_corpus: image " + std::to_string(i) +
                           " has a different shape");
    }
  }
  if (same_class_only && labels.size() != images.size()) {
    throw InvalidArgumentError(
        "lsb_swap_corpus: labels must parallel images when pairing within "
        "classes");
  }

  std::vector<ImageU8> out(images.begin(), images.end());
  Rng rng(pairing_seed);
  if (!same_class_only) {
    std::vector<std::size_t> indices(images.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    swap_group(out, indices, low_mask, rng);
    return out;
  }

  // Group indices by label; each group is paired independently. Group order
  // follows ascending label so the draw sequence is reproducible.
  int max_label = 0;
  for (const int label : labels) {
    if (label < 0) {
      throw InvalidArgumentError("lsb_swap_corpus: negative label");
    }
    max_label = std::max(max_label, label);
  }
  std::vector<std::vector<std::size_t>> groups(
      static_cast<std::size_t>(max_label) + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    groups[static_cast<std::size_t>(labels[i])].push_back(i);
  }
  for (auto& group : groups) {
    if (group.size() >= 2) {
      swap_group(out, group, low_mask, rng);
    }
  }
  return out;
}

}  // namespace deft
