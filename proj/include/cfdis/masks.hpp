#ifndef CFDIS_MASKS_HPP
#define CFDIS_MASKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cfdis/arrayio.hpp"
#include "cfdis/common.hpp"

namespace cfdis {

// Boolean grid at some pixel resolution; the currency of all IoU math.
struct BinaryMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> grid;  // row-major, 0/1

  BinaryMask() = default;
  BinaryMask(int h, int w) : height(h), width(w), grid(std::size_t(h) * w, 0) {
    if (h < 1 || w < 1) throw DimensionMismatch("mask dims must be >= 1");
  }

  std::uint8_t& at(int y, int x) { return grid[std::size_t(y) * width + x]; }
  std::uint8_t at(int y, int x) const { return grid[std::size_t(y) * width + x]; }

  std::int64_t popcount() const {
    std::int64_t n = 0;
    for (auto b : grid) n += b ? 1 : 0;
    return n;
  }
  bool empty_mask() const { return popcount() == 0; }
  bool same_dims(const BinaryMask& o) const { return height == o.height && width == o.width; }
};

// Signed per-pixel relevance for one (block, channel) at the block's native
// resolution. Positive values support the explained prediction.
struct EvidenceMap {
  int height = 0;
  int width = 0;
  int block = 0;    // 1-based block index
  int channel = 0;  // 0-based channel index
  std::vector<double> values;

  double& at(int y, int x) { return values[std::size_t(y) * width + x]; }
  double at(int y, int x) const { return values[std::size_t(y) * width + x]; }
};

// Binarization policy for turning real-valued evidence into a mask.
struct ThresholdPolicy {
  enum class Kind { PositiveQuantile, Absolute };
  Kind kind = Kind::PositiveQuantile;
  double q = 0.2;    // keep the top q fraction of strictly positive values
  double tau = 0.0;  // absolute threshold, mask = values > tau

  static ThresholdPolicy positive_quantile(double q) {
    ThresholdPolicy p;
    p.kind = Kind::PositiveQuantile;
    p.q = q;
    return p;
  }
  static ThresholdPolicy absolute(double tau) {
    ThresholdPolicy p;
    p.kind = Kind::Absolute;
    p.tau = tau;
    return p;
  }
};

// Result of picking the best-matching channel in one block.
struct RepresentativeSelection {
  int channel = 0;
  double iou = 0.0;
  int block = 0;
};

// |a ∩ b| / |a ∪ b| over pixels. Throws DimensionMismatch on shape
// disagreement and DegenerateMasks when both masks are all-false.
double iou(const BinaryMask& a, const BinaryMask& b);

// Mask of positive relevance above the policy threshold. Quantile policy
// keeps the ceil(q * P) largest strictly positive values (ties at the
// threshold included); with no positive values the mask is all-false.
BinaryMask binarize_evidence(const EvidenceMap& e, const ThresholdPolicy& policy);

// Nearest-neighbor upsample: source index = floor(i * src / dst).
BinaryMask upsample_mask(const BinaryMask& m, int target_h, int target_w);

// Binarize + upsample each map of one block and return the channel with
// maximal IoU against the reference. Ties break to the lowest channel index;
// channels whose masks are degenerate against the reference score 0.
RepresentativeSelection best_map_vs_reference(const std::vector<EvidenceMap>& maps,
                                              const BinaryMask& reference,
                                              const ThresholdPolicy& policy);

// Archive helpers (8-bit 0/1 for masks, f32 for evidence, header in meta).
void mask_to_archive(ArrayArchive& a, const std::string& name, const BinaryMask& m,
                     int block = -1, int channel = -1);
BinaryMask mask_from_archive(const ArrayArchive& a, const std::string& name);
void evidence_to_archive(ArrayArchive& a, const std::string& name, const EvidenceMap& e);
EvidenceMap evidence_from_archive(const ArrayArchive& a, const std::string& name);

}  // namespace cfdis

#endif  // CFDIS_MASKS_HPP
