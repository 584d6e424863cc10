#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "tcn/common.hpp"

namespace tcn::nets {

enum class BundleMode { kPaired, kUnpaired };

struct NetworkConfig {
  int n_contents = 10;     // N (style classes S in unpaired mode: n_contents unused)
  int n_typefaces = 6;     // T (or S styles in unpaired mode)
  int latent_dim = 256;    // h and u dimension
  int embed_dim = 256;     // label embedding rows are this wide
  int base_channels = 8;   // backbone width knob
  int in_channels = 1;     // 3 in unpaired mode
  BundleMode mode = BundleMode::kPaired;
  bool no_input_label = false;  // train/infer with a null input-label embedding

  bool operator==(const NetworkConfig&) const = default;
  std::string to_json() const;
  static NetworkConfig from_json(const std::string& json);
};

/// conv(3x3, stride s) -> norm -> relu -> conv(3x3) -> norm, plus a 1x1
/// projection shortcut when shape changes.
struct ResidualBlockImpl : torch::nn::Module {
  ResidualBlockImpl(int in, int out, int stride, bool norm);
  torch::Tensor forward(torch::Tensor x);

  torch::nn::Conv2d conv1 = nullptr, conv2 = nullptr, shortcut = nullptr;
  torch::nn::InstanceNorm2d norm1 = nullptr, norm2 = nullptr;
  bool use_norm;
};
TORCH_MODULE(ResidualBlock);

/// Stem conv then six residual blocks downsampling 128x128 -> 8x8 with
/// latent_dim channels, global average pooled to a latent vector.
struct ResidualBackboneImpl : torch::nn::Module {
  ResidualBackboneImpl(int in_channels, int base_channels, int latent_dim, bool norm);
  torch::Tensor forward(torch::Tensor x);  // [B,C,128,128] -> [B,latent]

  torch::nn::Conv2d stem = nullptr;
  torch::nn::InstanceNorm2d stem_norm = nullptr;
  std::vector<ResidualBlock> blocks;
  bool use_norm;
};
TORCH_MODULE(ResidualBackbone);

struct EncoderOutput {
  torch::Tensor h;       // [B,latent]
  torch::Tensor logits;  // [B,classes]
};

/// Typeface or content encoder: backbone plus a 1-layer FC classifier head.
/// The two encoders share the structure but never the parameters.
struct EncoderImpl : torch::nn::Module {
  EncoderImpl(int in_channels, int base_channels, int latent_dim, int n_classes);
  EncoderOutput forward(const torch::Tensor& x);

  ResidualBackbone backbone = nullptr;
  torch::nn::Linear head = nullptr;
};
TORCH_MODULE(Encoder);

/// Learned table of per-class label vectors.
struct LabelEmbeddingImpl : torch::nn::Module {
  LabelEmbeddingImpl(int n_classes, int dim);
  torch::Tensor forward(const torch::Tensor& ids);  // [B] int64 -> [B,dim]
  torch::Tensor lookup(int id);

  torch::nn::Embedding table = nullptr;
  int n_classes;
};
TORCH_MODULE(LabelEmbedding);

/// f: the stacked input vectors (channels of a length-latent_dim signal) are
/// mixed by one 1x1 convolution into u. Parameter count is independent of
/// the number of classes.
struct FeatureMixerImpl : torch::nn::Module {
  explicit FeatureMixerImpl(int n_inputs);
  torch::Tensor forward(const std::vector<torch::Tensor>& parts);  // each [B,latent]

  torch::nn::Conv1d mix = nullptr;
};
TORCH_MODULE(FeatureMixer);

/// g: projects u to an 8x8 map and upsamples through four fractionally
/// strided convolution blocks to 128x128, sigmoid output in [0,1].
struct ImageGeneratorImpl : torch::nn::Module {
  ImageGeneratorImpl(int latent_dim, int base_channels, int out_channels);
  torch::Tensor forward(const torch::Tensor& u);  // [B,latent] -> [B,C,128,128]

  torch::nn::Linear project = nullptr;
  torch::nn::Sequential up = nullptr;
  int start_channels;
};
TORCH_MODULE(ImageGenerator);

/// G = g . f. Inputs: typeface feature, content feature (paired mode) and the
/// input/target label embeddings.
struct GeneratorImpl : torch::nn::Module {
  GeneratorImpl(int latent_dim, int base_channels, int out_channels, int n_feature_inputs);

  torch::Tensor combine(const std::vector<torch::Tensor>& parts);
  torch::Tensor forward(const std::vector<torch::Tensor>& parts);

  FeatureMixer mixer = nullptr;
  ImageGenerator decoder = nullptr;
};
TORCH_MODULE(Generator);

struct DiscriminatorOutput {
  torch::Tensor p_tf;  // [B] real/fake probability
  torch::Tensor p_t;   // [B,T] typeface probabilities, rows sum to 1
  torch::Tensor p_c;   // [B,N] content probabilities (undefined in unpaired mode)
};

/// One shared backbone, three classifier heads; backbone features are not
/// exposed. Unpaired mode drops the content head.
struct DiscriminatorImpl : torch::nn::Module {
  DiscriminatorImpl(int in_channels, int base_channels, int latent_dim, int n_typefaces,
                    int n_contents, bool with_content_head);
  DiscriminatorOutput forward(const torch::Tensor& x);

  ResidualBackbone backbone = nullptr;
  torch::nn::Linear head_tf = nullptr, head_t = nullptr, head_c = nullptr;
  bool has_content_head;
};
TORCH_MODULE(Discriminator);

/// Everything learned: the two encoders, G, D and the label embedding. The
/// unpaired variant has no content encoder and uses style labels.
struct ModelBundle {
  NetworkConfig config;
  Encoder typeface_encoder = nullptr;
  Encoder content_encoder = nullptr;  // null in unpaired mode
  Generator generator = nullptr;
  Discriminator discriminator = nullptr;
  LabelEmbedding embedding = nullptr;

  std::vector<torch::Tensor> generator_parameters() const;  // encoders + G + emb
  std::vector<torch::Tensor> discriminator_parameters() const;
  void to(torch::Device device);
  void train();
  void eval();
};

ModelBundle make_bundle(const NetworkConfig& config);

/// Combined feature u for (h_t, h_c, y_in, y_tgt); honors no_input_label.
torch::Tensor combine_features(const ModelBundle& bundle, const torch::Tensor& h_t,
                               const torch::Tensor& h_c, const torch::Tensor& y_in,
                               const torch::Tensor& y_tgt);

/// Decoder used only during encoder pretraining; same structure as the
/// generator with a two-way mixer, discarded afterwards.
struct PretrainDecoderImpl : torch::nn::Module {
  PretrainDecoderImpl(int latent_dim, int base_channels, int out_channels);
  torch::Tensor forward(const torch::Tensor& h_t, const torch::Tensor& h_c);

  Generator inner = nullptr;
};
TORCH_MODULE(PretrainDecoder);

struct ParameterCounts {
  std::map<std::string, int64_t> per_component;
  int64_t total = 0;
};

ParameterCounts count_parameters(const ModelBundle& bundle);
int64_t count_parameters(const torch::nn::Module& m);

// Checkpoints: one archive with a version tag, the config json and all
// parameter tensors. Config mismatch on load is an error, never a resize.
inline constexpr int64_t kCheckpointVersion = 1;
void save_bundle(const ModelBundle& bundle, const std::filesystem::path& path);
ModelBundle load_bundle(const std::filesystem::path& path);
void check_config_match(const NetworkConfig& expected, const NetworkConfig& actual);

}  // namespace tcn::nets
