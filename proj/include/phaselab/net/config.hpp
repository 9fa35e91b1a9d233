#pragma once

#include <string>
#include <variant>
#include <vector>

namespace phaselab {

struct ConvSpec {
  int in_channels = 0;
  int out_channels = 0;
  int kernel = 3;  // odd
  int stride = 1;
  int pad = 1;
};

struct ReluSpec {};

struct MaxPoolSpec {
  int size = 2;
  int stride = 2;
};

struct GlobalAvgPoolSpec {};

struct DenseSpec {
  int in = 0;
  int out = 0;
};

using LayerSpec =
    std::variant<ConvSpec, ReluSpec, MaxPoolSpec, GlobalAvgPoolSpec, DenseSpec>;

enum class DepthProfile { kShallow, kDeep, kCustom };

// Layer stack plus the input geometry it expects. validate() checks that
// shapes chain, kernels are odd, and exactly one dense head closes the net.
struct NetConfig {
  int in_channels = 4;  // 3 = RGB, 4 = RGBP
  int input_size = 64;  // square inputs
  int num_classes = 2;
  DepthProfile profile = DepthProfile::kCustom;
  std::vector<LayerSpec> layers;

  void validate() const;
  std::string describe() const;  // stable serialization, feeds the config hash
};

// The deep stack keeps six conv blocks (the first three followed by 2x2
// max-pools); the shallow stack keeps blocks 1-3 plus the final block only.
NetConfig make_profile_config(DepthProfile profile, int in_channels,
                              int input_size, int num_classes);

// First `depth` conv blocks of the deep stack plus the classification head,
// for the depth/performance sweep.
NetConfig make_depth_config(int depth, int in_channels, int input_size,
                            int num_classes);

// Receptive-field geometry per layer, by the recurrence
//   r_l = r_{l-1} + (k_l - 1) * prod_{i<l} s_i
// with the accumulated stride and left-padding offset. An output at index i
// sees input pixels [i*stride - offset, i*stride - offset + rf - 1].
struct RfEntry {
  int layer = 0;  // index into NetConfig::layers
  int rf = 1;
  int stride = 1;
  int offset = 0;
  int output_size = 0;
};

struct ReceptiveField {
  std::vector<RfEntry> per_layer;  // spatial layers only (conv/relu/pool)
  // Geometry of the feature map the classification head consumes.
  RfEntry at_head() const { return per_layer.back(); }
};

ReceptiveField receptive_field(const NetConfig& config);

// Full round-trip serialization, used by checkpoints and the CLI config file.
std::string net_config_to_json(const NetConfig& config);
NetConfig net_config_from_json(const std::string& text);

}  // namespace phaselab
