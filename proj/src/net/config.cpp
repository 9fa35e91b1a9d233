#include "phaselab/net/config.hpp"

#include <sstream>

#include "phaselab/core/error.hpp"

namespace phaselab {
namespace {

int conv_out_size(int in, int kernel, int stride, int pad) {
  return (in + 2 * pad - kernel) / stride + 1;
}

}  // namespace

void NetConfig::validate() const {
  if (in_channels != 3 && in_channels != 4)
    throw InvalidConfig("NetConfig: in_channels must be 3 or 4");
  if (input_size < 8) throw InvalidConfig("NetConfig: input_size too small");
  if (num_classes != 2 && num_classes != 5)
    throw InvalidConfig("NetConfig: num_classes must be 2 or 5");
  if (layers.empty()) throw InvalidConfig("NetConfig: empty layer stack");

  int ch = in_channels;
  int size = input_size;
  bool spatial = true;  // becomes false after global average pooling
  int dense_count = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& layer = layers[i];
    if (const auto* conv = std::get_if<ConvSpec>(&layer)) {
      if (!spatial) throw InvalidConfig("NetConfig: conv after pooling head");
      if (conv->kernel <= 0 || conv->kernel % 2 == 0)
        throw InvalidConfig("NetConfig: conv kernel must be odd");
      if (conv->in_channels != ch)
        throw InvalidConfig("NetConfig: conv input channels do not chain");
      if (conv->out_channels <= 0)
        throw InvalidConfig("NetConfig: conv output channels must be positive");
      if (conv->stride < 1 || conv->pad < 0)
        throw InvalidConfig("NetConfig: bad conv stride/pad");
      size = conv_out_size(size, conv->kernel, conv->stride, conv->pad);
      if (size < 1) throw InvalidConfig("NetConfig: conv collapses the feature map");
      ch = conv->out_channels;
    } else if (std::holds_alternative<MaxPoolSpec>(layer)) {
      if (!spatial) throw InvalidConfig("NetConfig: pool after pooling head");
      const auto& pool = std::get<MaxPoolSpec>(layer);
      if (pool.size < 1 || pool.stride < 1)
        throw InvalidConfig("NetConfig: bad pool size/stride");
      size = (size - pool.size) / pool.stride + 1;
      if (size < 1) throw InvalidConfig("NetConfig: pool collapses the feature map");
    } else if (std::holds_alternative<GlobalAvgPoolSpec>(layer)) {
      if (!spatial) throw InvalidConfig("NetConfig: repeated pooling head");
      spatial = false;
      size = 1;
    } else if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
      if (spatial)
        throw InvalidConfig("NetConfig: dense head requires global pooling first");
      if (dense->in != ch)
        throw InvalidConfig("NetConfig: dense input does not chain");
      if (i + 1 != layers.size())
        throw InvalidConfig("NetConfig: dense head must be the final layer");
      if (dense->out != num_classes)
        throw InvalidConfig("NetConfig: dense output must equal num_classes");
      ++dense_count;
      ch = dense->out;
    }
  }
  if (dense_count != 1)
    throw InvalidConfig("NetConfig: exactly one dense classification head required");
}

std::string NetConfig::describe() const {
  std::ostringstream out;
  out << "in=" << in_channels << ";size=" << input_size << ";classes="
      << num_classes << ";";
  for (const LayerSpec& layer : layers) {
    if (const auto* c = std::get_if<ConvSpec>(&layer))
      out << "conv(" << c->in_channels << "," << c->out_channels << ",k" << c->kernel
          << ",s" << c->stride << ",p" << c->pad << ");";
    else if (std::holds_alternative<ReluSpec>(layer))
      out << "relu;";
    else if (const auto* p = std::get_if<MaxPoolSpec>(&layer))
      out << "maxpool(" << p->size << ",s" << p->stride << ");";
    else if (std::holds_alternative<GlobalAvgPoolSpec>(layer))
      out << "gap;";
    else if (const auto* d = std::get_if<DenseSpec>(&layer))
      out << "dense(" << d->in << "," << d->out << ");";
  }
  return out.str();
}

namespace {

constexpr int kBlockWidths[6] = {8, 12, 16, 20, 24, 28};

void push_block(NetConfig& cfg, int& ch, int width, bool pool) {
  cfg.layers.push_back(ConvSpec{ch, width, 3, 1, 1});
  cfg.layers.push_back(ReluSpec{});
  if (pool) cfg.layers.push_back(MaxPoolSpec{2, 2});
  ch = width;
}

void push_head(NetConfig& cfg, int ch) {
  cfg.layers.push_back(GlobalAvgPoolSpec{});
  cfg.layers.push_back(DenseSpec{ch, cfg.num_classes});
}

}  // namespace

NetConfig make_profile_config(DepthProfile profile, int in_channels, int input_size,
                              int num_classes) {
  if (profile == DepthProfile::kCustom)
    throw InvalidConfig("make_profile_config: profile must be shallow or deep");
  NetConfig cfg;
  cfg.in_channels = in_channels;
  cfg.input_size = input_size;
  cfg.num_classes = num_classes;
  cfg.profile = profile;
  int ch = in_channels;
  // blocks 1-3 with pooling, shared by both profiles
  for (int b = 0; b < 3; ++b) push_block(cfg, ch, kBlockWidths[b], true);
  if (profile == DepthProfile::kDeep) {
    for (int b = 3; b < 6; ++b) push_block(cfg, ch, kBlockWidths[b], false);
  } else {
    // shallow: jump straight to the final block
    push_block(cfg, ch, kBlockWidths[5], false);
  }
  push_head(cfg, ch);
  cfg.validate();
  return cfg;
}

NetConfig make_depth_config(int depth, int in_channels, int input_size,
                            int num_classes) {
  if (depth < 1 || depth > 6)
    throw InvalidConfig("make_depth_config: depth must be in [1, 6]");
  NetConfig cfg;
  cfg.in_channels = in_channels;
  cfg.input_size = input_size;
  cfg.num_classes = num_classes;
  cfg.profile = DepthProfile::kCustom;
  int ch = in_channels;
  for (int b = 0; b < depth; ++b)
    push_block(cfg, ch, kBlockWidths[b], b < 3);
  push_head(cfg, ch);
  cfg.validate();
  return cfg;
}

ReceptiveField receptive_field(const NetConfig& config) {
  config.validate();
  ReceptiveField out;
  int rf = 1, stride = 1, offset = 0;
  int size = config.input_size;
  for (std::size_t i = 0; i < config.layers.size(); ++i) {
    const LayerSpec& layer = config.layers[i];
    bool emit = true;
    if (const auto* conv = std::get_if<ConvSpec>(&layer)) {
      rf += (conv->kernel - 1) * stride;
      offset += conv->pad * stride;
      stride *= conv->stride;
      size = conv_out_size(size, conv->kernel, conv->stride, conv->pad);
    } else if (const auto* pool = std::get_if<MaxPoolSpec>(&layer)) {
      rf += (pool->size - 1) * stride;
      stride *= pool->stride;
      size = (size - pool->size) / pool->stride + 1;
    } else if (std::holds_alternative<ReluSpec>(layer)) {
      // pointwise, geometry unchanged
    } else {
      emit = false;  // gap/dense see the whole map
    }
    if (emit)
      out.per_layer.push_back(
          RfEntry{static_cast<int>(i), rf, stride, offset, size});
  }
  if (out.per_layer.empty())
    throw InvalidConfig("receptive_field: no spatial layers");
  return out;
}

}  // namespace phaselab
