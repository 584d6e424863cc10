#pragma once

#include <filesystem>
#include <string>

#include <torch/torch.h>

#include "tcn/common.hpp"

namespace tcn::data {

/// One character image with its labels. `pixels` is [C,128,128] float32 in
/// [0,1]; C is 1 for glyphs, 3 in the unpaired mode.
struct GlyphImage {
  torch::Tensor pixels;
  int typeface_id = -1;
  int content_id = -1;
};

/// Throws TcnError(kData) when shape/range/label invariants are violated.
void validate_glyph(const GlyphImage& g, int n_typefaces, int n_contents);

/// Shape/range check only (no manifest context).
bool is_valid_image(const torch::Tensor& pixels, int channels = 1);

// 8-bit PNG io. Grayscale for [1,H,W], RGB for [3,H,W].
void write_png(const std::filesystem::path& path, const torch::Tensor& pixels);
torch::Tensor read_png(const std::filesystem::path& path);

/// Tile a list of [C,H,W] images into one grid image, `columns` wide.
torch::Tensor contact_sheet(const std::vector<torch::Tensor>& images, int columns);

}  // namespace tcn::data
