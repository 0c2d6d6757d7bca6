#include "cfdis/masks.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace cfdis {

double iou(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_dims(b))
    throw DimensionMismatch("iou: " + std::to_string(a.height) + "x" + std::to_string(a.width) +
                            " vs " + std::to_string(b.height) + "x" + std::to_string(b.width));
  std::int64_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.grid.size(); ++i) {
    bool pa = a.grid[i] != 0, pb = b.grid[i] != 0;
    inter += (pa && pb) ? 1 : 0;
    uni += (pa || pb) ? 1 : 0;
  }
  if (uni == 0) throw DegenerateMasks("iou undefined for two empty masks");
  return double(inter) / double(uni);
}

BinaryMask binarize_evidence(const EvidenceMap& e, const ThresholdPolicy& policy) {
  for (double v : e.values)
    if (!std::isfinite(v)) throw InvalidPolicy("evidence map contains non-finite values");

  BinaryMask m(e.height, e.width);
  if (policy.kind == ThresholdPolicy::Kind::Absolute) {
    if (policy.tau < 0.0) throw InvalidPolicy("absolute threshold must be >= 0");
    for (std::size_t i = 0; i < e.values.size(); ++i)
      m.grid[i] = e.values[i] > policy.tau ? 1 : 0;
    return m;
  }

  if (!(policy.q > 0.0 && policy.q < 1.0)) throw InvalidPolicy("quantile q must lie in (0,1)");
  std::vector<double> positives;
  positives.reserve(e.values.size());
  for (double v : e.values)
    if (v > 0.0) positives.push_back(v);
  if (positives.empty()) return m;  // no positive relevance anywhere

  std::int64_t keep = std::int64_t(std::ceil(policy.q * double(positives.size())));
  keep = std::clamp<std::int64_t>(keep, 1, std::int64_t(positives.size()));
  std::nth_element(positives.begin(), positives.begin() + (keep - 1), positives.end(),
                   std::greater<double>());
  double threshold = positives[std::size_t(keep - 1)];
  for (std::size_t i = 0; i < e.values.size(); ++i)
    m.grid[i] = (e.values[i] > 0.0 && e.values[i] >= threshold) ? 1 : 0;
  return m;
}

BinaryMask upsample_mask(const BinaryMask& m, int target_h, int target_w) {
  if (target_h < m.height || target_w < m.width)
    throw InvalidTarget("upsample target smaller than source");
  BinaryMask out(target_h, target_w);
  for (int y = 0; y < target_h; ++y) {
    int sy = int(std::int64_t(y) * m.height / target_h);
    for (int x = 0; x < target_w; ++x) {
      int sx = int(std::int64_t(x) * m.width / target_w);
      out.at(y, x) = m.at(sy, sx);
    }
  }
  return out;
}

RepresentativeSelection best_map_vs_reference(const std::vector<EvidenceMap>& maps,
                                              const BinaryMask& reference,
                                              const ThresholdPolicy& policy) {
  if (maps.empty()) throw EmptyBlock("no evidence maps to select from");
  RepresentativeSelection best;
  best.block = maps.front().block;
  best.channel = maps.front().channel;
  best.iou = -1.0;
  for (const EvidenceMap& e : maps) {
    BinaryMask m = upsample_mask(binarize_evidence(e, policy), reference.height, reference.width);
    double score;
    try {
      score = iou(m, reference);
    } catch (const DegenerateMasks&) {
      score = 0.0;
    }
    if (score > best.iou) {
      best.iou = score;
      best.channel = e.channel;
      best.block = e.block;
    }
  }
  if (best.iou < 0.0) best.iou = 0.0;
  return best;
}

void mask_to_archive(ArrayArchive& a, const std::string& name, const BinaryMask& m, int block,
                     int channel) {
  nlohmann::json meta{{"kind", "mask"}, {"height", m.height}, {"width", m.width}};
  if (block >= 0) meta["block"] = block;
  if (channel >= 0) meta["channel"] = channel;
  a.put_text(name + "/meta", meta.dump());
  a.put_u8(name, {m.height, m.width}, m.grid);
}

BinaryMask mask_from_archive(const ArrayArchive& a, const std::string& name) {
  std::vector<std::int64_t> dims;
  auto bytes = a.get_u8(name, &dims);
  if (dims.size() != 2) throw IoError("mask entry is not 2-D: " + name);
  BinaryMask m(int(dims[0]), int(dims[1]));
  for (std::size_t i = 0; i < bytes.size(); ++i) m.grid[i] = bytes[i] ? 1 : 0;
  return m;
}

void evidence_to_archive(ArrayArchive& a, const std::string& name, const EvidenceMap& e) {
  nlohmann::json meta{{"kind", "evidence"},
                      {"block", e.block},
                      {"channel", e.channel},
                      {"height", e.height},
                      {"width", e.width}};
  a.put_text(name + "/meta", meta.dump());
  std::vector<float> f(e.values.begin(), e.values.end());
  a.put_f32(name, {e.height, e.width}, f);
}

EvidenceMap evidence_from_archive(const ArrayArchive& a, const std::string& name) {
  auto meta = nlohmann::json::parse(a.get_text(name + "/meta"));
  std::vector<std::int64_t> dims;
  auto f = a.get_f32(name, &dims);
  EvidenceMap e;
  e.height = int(dims.at(0));
  e.width = int(dims.at(1));
  e.block = meta.value("block", 0);
  e.channel = meta.value("channel", 0);
  e.values.assign(f.begin(), f.end());
  return e;
}

}  // namespace cfdis
