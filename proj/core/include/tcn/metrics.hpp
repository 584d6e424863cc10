#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "tcn/glyphdata.hpp"
#include "tcn/networks.hpp"

namespace tcn::metrics {

struct SsimParams {
  double c1 = 1e-4;            // (0.01 * L)^2
  double c2 = 9e-4;            // (0.03 * L)^2
  double dynamic_range = 1.0;  // L
  bool global_window = false;  // one window spanning the whole image
  int window_size = 11;
  double window_sigma = 1.5;

  static SsimParams gaussian(int size = 11, double sigma = 1.5, double L = 1.0);
  static SsimParams global(double L = 1.0);
};

/// Normalized 2-D Gaussian window, [size,size], sums to 1.
torch::Tensor gaussian_window(int size, double sigma, torch::Dtype dtype = torch::kFloat32);

/// SSIM index between images of equal shape ([H,W], [C,H,W] or [B,C,H,W]),
/// differentiable, computed in the input dtype. Windowed mode averages
/// per-window scores (zero padding, stride 1); global mode uses whole-image
/// moments. Returns a scalar tensor in [-1,1].
torch::Tensor ssim(const torch::Tensor& a, const torch::Tensor& b,
                   const SsimParams& params = SsimParams::gaussian());

/// Mean absolute pixel difference, scalar tensor in [0,1].
torch::Tensor l1_distance(const torch::Tensor& a, const torch::Tensor& b);

/// Frozen typeface/content classifiers trained on real images of one split,
/// independent of the generative model.
struct EvalClassifiers {
  nets::Encoder typeface_classifier = nullptr;
  nets::Encoder content_classifier = nullptr;
  double typeface_holdout_accuracy = 0.0;
  double content_holdout_accuracy = 0.0;
};

struct ClassifierTrainOptions {
  int epochs = 120;
  int batch_size = 8;
  double lr = 1e-4;         // Adam, beta 0.5/0.999 as in the main model
  double holdout_fraction = 0.25;
  int base_channels = 8;
  uint64_t seed = 7;
};

/// Trains both classifiers on `split` real images with a seeded image-level
/// holdout; accuracies are measured on the holdout. Throws TcnError(kData)
/// when the split has a single typeface or content class.
EvalClassifiers train_eval_classifiers(const data::ImageStore& store, data::Split split,
                                       const ClassifierTrainOptions& options = {});

struct ScoreReport {
  double ssim = 0.0;
  double l1 = 0.0;
  double typeface_accuracy = 0.0;  // predicted typeface == source typeface
  double content_accuracy = 0.0;   // predicted content == target content
  int count = 0;
};

/// Scores aligned generated/target pairs. `source_typefaces` and
/// `target_contents` are the labels the classifier predictions are compared
/// against.
ScoreReport score_outputs(const std::vector<torch::Tensor>& generated,
                          const std::vector<torch::Tensor>& targets,
                          const std::vector<int>& source_typefaces,
                          const std::vector<int>& target_contents,
                          const EvalClassifiers& clf,
                          const SsimParams& params = SsimParams::gaussian());

/// metric -> value lines, plus a table mirroring the completion /
/// reconstruction report columns.
void write_metric_report(const std::filesystem::path& path,
                         const std::map<std::string, double>& values);
void write_score_table(const std::filesystem::path& path, const ScoreReport& completion,
                       const ScoreReport& reconstruction);

}  // namespace tcn::metrics
