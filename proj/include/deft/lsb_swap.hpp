#ifndef DEFT_LSB_SWAP_HPP
#define DEFT_LSB_SWAP_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "deft/image.hpp"

namespace deft {

/// Exchanges the k lowest bits of every sample between a and b. For each
/// sample position the first output keeps the top (8 - k) bits of a and
/// takes the bottom k bits of b, and symmetrically for the second output.
/// k = 0 is the identity, k = 8 a full exchange. Inputs are left untouched.
///
/// Throws DimensionError if the shapes differ and InvalidArgumentError if
/// k is outside [0, 8].
std::pair<ImageU8, ImageU8> lsb_swap(const ImageU8& a, const ImageU8& b, int k);

/// Swaps the k lowest bitplanes across a corpus. Images are paired by a
/// seeded random shuffle (consecutive entries of the shuffled order become
/// partners, so no image is paired with itself) and each pair is replaced
/// by its lsb_swap outputs, kept at the original positions. With an odd
/// count the leftover image passes through unchanged.
///
/// Requires at least 2 images, all of the same shape.
std::vector<ImageU8> lsb_swap_corpus(std::span<const ImageU8> images, int k,
                                     std::uint64_t pairing_seed);

/// Same as above, but when same_class_only is set partners are drawn only
/// from images with the same label. labels must parallel images.
std::vector<ImageU8> lsb_swap_corpus(std::span<const ImageU8> images,
                                     std::span<const int> labels,
                                     bool same_class_only, int k,
                                     std::uint64_t pairing_seed);

}  // namespace deft

#endif  // DEFT_LSB_SWAP_HPP
