#include <json.hpp>

#include "phaselab/core/error.hpp"
#include "phaselab/net/config.hpp"

namespace phaselab {
namespace {

using nlohmann::json;

json layer_to_json(const LayerSpec& layer) {
  json j;
  if (const auto* c = std::get_if<ConvSpec>(&layer)) {
    j["kind"] = "conv";
    j["in"] = c->in_channels;
    j["out"] = c->out_channels;
    j["kernel"] = c->kernel;
    j["stride"] = c->stride;
    j["pad"] = c->pad;
  } else if (std::holds_alternative<ReluSpec>(layer)) {
    j["kind"] = "relu";
  } else if (const auto* p = std::get_if<MaxPoolSpec>(&layer)) {
    j["kind"] = "maxpool";
    j["size"] = p->size;
    j["stride"] = p->stride;
  } else if (std::holds_alternative<GlobalAvgPoolSpec>(layer)) {
    j["kind"] = "gap";
  } else if (const auto* d = std::get_if<DenseSpec>(&layer)) {
    j["kind"] = "dense";
    j["in"] = d->in;
    j["out"] = d->out;
  }
  return j;
}

LayerSpec layer_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "conv")
    return ConvSpec{j.at("in").get<int>(), j.at("out").get<int>(),
                    j.at("kernel").get<int>(), j.at("stride").get<int>(),
                    j.at("pad").get<int>()};
  if (kind == "relu") return ReluSpec{};
  if (kind == "maxpool")
    return MaxPoolSpec{j.at("size").get<int>(), j.at("stride").get<int>()};
  if (kind == "gap") return GlobalAvgPoolSpec{};
  if (kind == "dense") return DenseSpec{j.at("in").get<int>(), j.at("out").get<int>()};
  throw InvalidConfig("unknown layer kind: " + kind);
}

}  // namespace

std::string net_config_to_json(const NetConfig& config) {
  json j;
  j["in_channels"] = config.in_channels;
  j["input_size"] = config.input_size;
  j["num_classes"] = config.num_classes;
  j["profile"] = config.profile == DepthProfile::kShallow  ? "shallow"
                 : config.profile == DepthProfile::kDeep ? "deep"
                                                          : "custom";
  json layers = json::array();
  for (const auto& l : config.layers) layers.push_back(layer_to_json(l));
  j["layers"] = layers;
  return j.dump();
}

NetConfig net_config_from_json(const std::string& text) {
  const json j = json::parse(text);
  NetConfig cfg;
  cfg.in_channels = j.at("in_channels").get<int>();
  cfg.input_size = j.at("input_size").get<int>();
  cfg.num_classes = j.at("num_classes").get<int>();
  const std::string profile = j.at("profile").get<std::string>();
  cfg.profile = profile == "shallow" ? DepthProfile::kShallow
                : profile == "deep" ? DepthProfile::kDeep
                                    : DepthProfile::kCustom;
  for (const auto& l : j.at("layers")) cfg.layers.push_back(layer_from_json(l));
  cfg.validate();
  return cfg;
}

}  // namespace phaselab
