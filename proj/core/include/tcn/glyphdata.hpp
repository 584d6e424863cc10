#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "tcn/common.hpp"
#include "tcn/image.hpp"
#include "tcn/manifest.hpp"
#include "tcn/ttf.hpp"

namespace tcn::data {

/// Anchor x_i, a glyph x_j of the same typeface but different content, and a
/// glyph x_k of the same content but different typeface.
struct TripletBatch {
  GlyphImage anchor;
  GlyphImage same_typeface;
  GlyphImage same_content;
};

/// Loads one glyph from a font file onto the 128 canvas. Throws
/// TcnError(kMissingGlyph) when the codepoint is unmapped or the raster has
/// below 0.5% ink coverage.
torch::Tensor render_glyph(const TtfFont& font, uint32_t codepoint, int canvas = 128);
torch::Tensor render_glyph(const std::filesystem::path& font_file, uint32_t codepoint,
                           int canvas = 128);

/// Charset file: one codepoint per line ("U+4E00" or a literal character),
/// order defining content_id.
std::vector<std::string> load_charset(const std::filesystem::path& path);
std::vector<std::string> charset_preset(const std::string& name);  // "english", "chinese"
uint32_t charset_codepoint(const std::string& token);

struct BuildOptions {
  SplitSpec split;
  uint64_t seed = 1;
  double min_coverage = 0.5;  // fonts rendering fewer glyphs than this are dropped
  int workers = 0;            // 0 = TCN_NUM_WORKERS or hardware
};

/// Rasterizes every (font, codepoint) pair into out_dir/images, assigns the
/// typeface-level split and writes out_dir/manifest.csv(+.json).
DatasetManifest build_manifest(const std::filesystem::path& font_dir,
                               const std::vector<std::string>& charset,
                               const std::filesystem::path& out_dir,
                               const BuildOptions& options);

/// Procedural desk-scale dataset: n_typefaces parameter sets x n_contents
/// shapes, written like build_manifest output.
DatasetManifest make_toy_dataset(int n_typefaces, int n_contents, uint64_t seed,
                                 const std::filesystem::path& out_dir);

/// In-memory image cache over a manifest.
class ImageStore {
 public:
  explicit ImageStore(const DatasetManifest& manifest);

  GlyphImage get(size_t entry_index) const;
  torch::Tensor pixels(size_t entry_index) const;
  const DatasetManifest& manifest() const { return manifest_; }

 private:
  DatasetManifest manifest_;
  mutable std::vector<torch::Tensor> cache_;
};

/// Uniform anchor, then uniform valid partners; bounded resampling before
/// TcnError(kData). Split needs >=2 typefaces and >=2 contents.
TripletBatch sample_triplet(const ImageStore& store, Split split, Rng& rng);

/// Main-training pair: x_k shares the anchor's typeface, different content.
struct PairSample {
  GlyphImage source;  // x_i
  GlyphImage target;  // x_k
};
PairSample sample_pair(const ImageStore& store, Split split, Rng& rng);

// Stacked batches for the training loop.
struct TripletTensors {
  torch::Tensor anchor, same_typeface, same_content;  // [B,C,H,W]
  torch::Tensor typeface_ids, content_ids;            // [B] int64, anchor labels
};
TripletTensors stack_triplets(const ImageStore& store, Split split, int batch, Rng& rng);

struct PairTensors {
  torch::Tensor source, target;              // [B,C,H,W]
  torch::Tensor typeface_ids;                // [B] shared typeface
  torch::Tensor source_contents, target_contents;  // [B]
};
PairTensors stack_pairs(const ImageStore& store, Split split, int batch, Rng& rng);

/// Unpaired styled images (RGB), for the face-generation mode surrogate.
struct StyleDataset {
  std::vector<torch::Tensor> images;  // [3,H,W] each
  std::vector<int> style_ids;
  int n_styles = 0;
};

StyleDataset make_toy_style_dataset(int n_styles, int images_per_style, uint64_t seed);
void save_style_dataset(const StyleDataset& ds, const std::filesystem::path& out_dir);
StyleDataset load_style_dataset(const std::filesystem::path& dir);

}  // namespace tcn::data
