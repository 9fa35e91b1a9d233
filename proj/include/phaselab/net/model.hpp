#pragma once

#include <cstdint>
#include <vector>

#include "phaselab/net/config.hpp"
#include "phaselab/net/tensor.hpp"

namespace phaselab {

// Weights/biases aligned with NetConfig::layers; paramless layers hold empty
// tensors. Conv weights are [out, in, k, k], dense weights [out, in].
struct Params {
  std::vector<Tensor> weights;
  std::vector<Tensor> biases;

  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& t : weights) n += t.size();
    for (const auto& t : biases) n += t.size();
    return n;
  }
};

// Fan-in scaled normal init (all input channels treated alike, including the
// phase channel); biases start at zero.
Params init_params(const NetConfig& config, std::uint64_t seed);

Params zeros_like(const Params& p);

// Batch scores [N, num_classes]; inputs are [N, C, H, W].
Tensor forward(const NetConfig& config, const Params& params, const Tensor& batch);

// Row-wise softmax of a [N, K] score tensor; rows sum to 1.
Tensor softmax_rows(const Tensor& scores);

struct BackwardResult {
  Params grads;  // d(mean cross-entropy)/d(param)
  double loss = 0.0;
};

// Mean cross-entropy over the batch and its parameter gradients. Throws
// TrainingDivergence if activations or the loss go non-finite.
BackwardResult backward(const NetConfig& config, const Params& params,
                        const Tensor& batch, const std::vector<int>& labels);

// forward + softmax.
Tensor predict(const NetConfig& config, const Params& params, const Tensor& batch);

}  // namespace phaselab
