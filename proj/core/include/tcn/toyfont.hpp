#pragma once

#include <string>
#include <vector>

#include <torch/torch.h>

#include "tcn/common.hpp"

namespace tcn::data {

/// Rendering parameters shared by every glyph of one toy typeface.
struct ToyTypeface {
  double stroke_width = 0.10;  // fraction of canvas
  double slant = 0.0;          // horizontal shear
  double scale = 0.8;          // glyph extent relative to canvas
  double rounding = 0.0;       // 0 = crisp joints, 1 = heavily rounded
};

/// Shape families playing the role of character contents. Ids beyond the
/// named set continue as regular polygon outlines with increasing sides.
std::string toy_shape_name(int shape_id);
int toy_named_shape_count();

/// Deterministic per-pixel raster of one shape under one typeface,
/// [1,canvas,canvas] float32, ink 0 on background 1, anti-aliased.
torch::Tensor render_toy_glyph(const ToyTypeface& tf, int shape_id, int canvas = 128);

/// Draws n distinct typefaces from the seed. Pixel-identical pairs (checked
/// per shape 0) are regenerated with perturbed parameters.
std::vector<ToyTypeface> sample_toy_typefaces(int n, uint64_t seed);

/// RGB variant for the unpaired mode: same shape machinery, ink colored by
/// style. Returns [3,canvas,canvas].
torch::Tensor render_styled_glyph(const ToyTypeface& tf, int shape_id, int style_id,
                                  int canvas = 128);

int toy_style_count();

}  // namespace tcn::data
