#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <torch/torch.h>

namespace tcn::data {

/// Minimal TrueType reader: cmap (formats 4/12/6), glyf outlines including
/// composites, quadratic curve flattening and an anti-aliased scanline
/// rasterizer. OpenType files carrying CFF outlines are rejected at load.
class TtfFont {
 public:
  explicit TtfFont(const std::filesystem::path& path);

  /// 0 when the font has no mapping for the codepoint.
  uint32_t glyph_index(uint32_t codepoint) const;

  bool has_glyph(uint32_t codepoint) const { return glyph_index(codepoint) != 0; }

  /// Renders one glyph onto a white canvas: tight outline bbox scaled to fit
  /// the 112x112 inner box, centered. Returns [1,canvas,canvas] float32,
  /// ink 0, background 1. Empty outline renders blank.
  torch::Tensor render(uint32_t codepoint, int canvas = 128) const;

  int units_per_em() const { return units_per_em_; }
  size_t glyph_count() const { return n_glyphs_; }

 private:
  struct Point {
    float x, y;
    bool on_curve;
  };
  struct Outline {
    // closed contours of line segments, already flattened
    std::vector<std::vector<std::pair<float, float>>> contours;
  };

  uint32_t table_offset(uint32_t tag) const;
  void parse_cmap();
  Outline glyph_outline(uint32_t glyph_id, int depth = 0) const;

  std::vector<uint8_t> bytes_;
  int units_per_em_ = 1000;
  bool long_loca_ = false;
  size_t n_glyphs_ = 0;
  uint32_t glyf_off_ = 0, loca_off_ = 0, cmap_sub_off_ = 0;
  int cmap_format_ = 0;
};

}  // namespace tcn::data
