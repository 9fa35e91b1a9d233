#include "phaselab/net/model.hpp"

#include <algorithm>
#include <cmath>

#include "phaselab/core/error.hpp"
#include "phaselab/core/rng.hpp"

namespace phaselab {
namespace {

struct Shape {
  int c = 0, h = 0, w = 0;  // h = w = 0 once the map is pooled away
};

// Output geometry after each layer, starting from the config input.
std::vector<Shape> layer_shapes(const NetConfig& cfg) {
  std::vector<Shape> shapes;
  Shape s{cfg.in_channels, cfg.input_size, cfg.input_size};
  for (const LayerSpec& layer : cfg.layers) {
    if (const auto* conv = std::get_if<ConvSpec>(&layer)) {
      s.h = (s.h + 2 * conv->pad - conv->kernel) / conv->stride + 1;
      s.w = (s.w + 2 * conv->pad - conv->kernel) / conv->stride + 1;
      s.c = conv->out_channels;
    } else if (const auto* pool = std::get_if<MaxPoolSpec>(&layer)) {
      s.h = (s.h - pool->size) / pool->stride + 1;
      s.w = (s.w - pool->size) / pool->stride + 1;
    } else if (std::holds_alternative<GlobalAvgPoolSpec>(layer)) {
      s.h = s.w = 0;
    } else if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
      s.c = dense->out;
    }
    shapes.push_back(s);
  }
  return shapes;
}

void conv_forward(const ConvSpec& c, const Tensor& w, const Tensor& b,
                  const Tensor& in, Shape is, Tensor& out, Shape os, int n_batch) {
  const int k = c.kernel, stride = c.stride, pad = c.pad;
  for (int n = 0; n < n_batch; ++n) {
    const double* in_n = in.v.data() + static_cast<std::size_t>(n) * is.c * is.h * is.w;
    double* out_n = out.v.data() + static_cast<std::size_t>(n) * os.c * os.h * os.w;
    for (int o = 0; o < os.c; ++o) {
      double* out_o = out_n + static_cast<std::size_t>(o) * os.h * os.w;
      for (int i = 0; i < os.h * os.w; ++i) out_o[i] = b.v[o];
      for (int ci = 0; ci < is.c; ++ci) {
        const double* in_c = in_n + static_cast<std::size_t>(ci) * is.h * is.w;
        const double* w_oc =
            w.v.data() + ((static_cast<std::size_t>(o) * is.c + ci) * k) * k;
        for (int ky = 0; ky < k; ++ky) {
          for (int kx = 0; kx < k; ++kx) {
            const double wv = w_oc[ky * k + kx];
            if (wv == 0.0) continue;
            for (int y = 0; y < os.h; ++y) {
              const int iy = y * stride - pad + ky;
              if (iy < 0 || iy >= is.h) continue;
              const double* in_row = in_c + static_cast<std::size_t>(iy) * is.w;
              double* out_row = out_o + static_cast<std::size_t>(y) * os.w;
              for (int x = 0; x < os.w; ++x) {
                const int ix = x * stride - pad + kx;
                if (ix < 0 || ix >= is.w) continue;
                out_row[x] += wv * in_row[ix];
              }
            }
          }
        }
      }
    }
  }
}

void conv_backward(const ConvSpec& c, const Tensor& w, const Tensor& in, Shape is,
                   const Tensor& d_out, Shape os, int n_batch, Tensor& d_in,
                   Tensor& d_w, Tensor& d_b) {
  const int k = c.kernel, stride = c.stride, pad = c.pad;
  for (int n = 0; n < n_batch; ++n) {
    const double* in_n = in.v.data() + static_cast<std::size_t>(n) * is.c * is.h * is.w;
    const double* dout_n =
        d_out.v.data() + static_cast<std::size_t>(n) * os.c * os.h * os.w;
    double* din_n = d_in.v.data() + static_cast<std::size_t>(n) * is.c * is.h * is.w;
    for (int o = 0; o < os.c; ++o) {
      const double* dout_o = dout_n + static_cast<std::size_t>(o) * os.h * os.w;
      for (int i = 0; i < os.h * os.w; ++i) d_b.v[o] += dout_o[i];
      for (int ci = 0; ci < is.c; ++ci) {
        const double* in_c = in_n + static_cast<std::size_t>(ci) * is.h * is.w;
        double* din_c = din_n + static_cast<std::size_t>(ci) * is.h * is.w;
        const std::size_t w_base = (static_cast<std::size_t>(o) * is.c + ci) *
                                   static_cast<std::size_t>(k) * k;
        for (int ky = 0; ky < k; ++ky) {
          for (int kx = 0; kx < k; ++kx) {
            const double wv = w.v[w_base + static_cast<std::size_t>(ky) * k + kx];
            double grad_w = 0.0;
            for (int y = 0; y < os.h; ++y) {
              const int iy = y * stride - pad + ky;
              if (iy < 0 || iy >= is.h) continue;
              const double* in_row = in_c + static_cast<std::size_t>(iy) * is.w;
              double* din_row = din_c + static_cast<std::size_t>(iy) * is.w;
              const double* dout_row = dout_o + static_cast<std::size_t>(y) * os.w;
              for (int x = 0; x < os.w; ++x) {
                const int ix = x * stride - pad + kx;
                if (ix < 0 || ix >= is.w) continue;
                grad_w += in_row[ix] * dout_row[x];
                din_row[ix] += wv * dout_row[x];
              }
            }
            d_w.v[w_base + static_cast<std::size_t>(ky) * k + kx] += grad_w;
          }
        }
      }
    }
  }
}

struct Trace {
  std::vector<Tensor> act;               // act[0] = input, act[i+1] = layer i output
  std::vector<std::vector<int>> argmax;  // per maxpool layer, flat input indices
};

Tensor run_forward(const NetConfig& cfg, const Params& params, const Tensor& batch,
                   Trace* trace) {
  if (batch.shape.size() != 4)
    throw InvalidInput("forward: batch must be [N, C, H, W]");
  const int n_batch = batch.shape[0];
  if (batch.shape[1] != cfg.in_channels)
    throw InvalidInput("forward: batch channel count does not match config");
  if (batch.shape[2] != cfg.input_size || batch.shape[3] != cfg.input_size)
    throw InvalidInput("forward: batch spatial size does not match config");

  const auto shapes = layer_shapes(cfg);
  Tensor cur = batch;
  Shape cur_shape{cfg.in_channels, cfg.input_size, cfg.input_size};
  if (trace) trace->act.push_back(cur);

  for (std::size_t li = 0; li < cfg.layers.size(); ++li) {
    const LayerSpec& layer = cfg.layers[li];
    const Shape os = shapes[li];
    Tensor next;
    if (const auto* conv = std::get_if<ConvSpec>(&layer)) {
      next = Tensor({n_batch, os.c, os.h, os.w});
      conv_forward(*conv, params.weights[li], params.biases[li], cur, cur_shape,
                   next, os, n_batch);
    } else if (std::holds_alternative<ReluSpec>(layer)) {
      next = cur;
      for (double& x : next.v) x = x > 0.0 ? x : 0.0;
      next.shape = {n_batch, os.c, os.h, os.w};
    } else if (const auto* pool = std::get_if<MaxPoolSpec>(&layer)) {
      next = Tensor({n_batch, os.c, os.h, os.w});
      std::vector<int> arg(next.size());
      const int ph = pool->size, ps = pool->stride;
      std::size_t oi = 0;
      for (int n = 0; n < n_batch; ++n)
        for (int ch = 0; ch < os.c; ++ch) {
          const double* in_c =
              cur.v.data() +
              (static_cast<std::size_t>(n) * cur_shape.c + ch) * cur_shape.h *
                  cur_shape.w;
          for (int y = 0; y < os.h; ++y)
            for (int x = 0; x < os.w; ++x, ++oi) {
              double best = -1e300;
              int best_idx = 0;
              for (int dy = 0; dy < ph; ++dy)
                for (int dx = 0; dx < ph; ++dx) {
                  const int iy = y * ps + dy, ix = x * ps + dx;
                  const int idx = iy * cur_shape.w + ix;
                  if (in_c[idx] > best) {
                    best = in_c[idx];
                    best_idx = idx;
                  }
                }
              next.v[oi] = best;
              arg[oi] = best_idx;
            }
        }
      if (trace) trace->argmax.push_back(std::move(arg));
    } else if (std::holds_alternative<GlobalAvgPoolSpec>(layer)) {
      next = Tensor({n_batch, os.c});
      const double inv = 1.0 / (static_cast<double>(cur_shape.h) * cur_shape.w);
      for (int n = 0; n < n_batch; ++n)
        for (int ch = 0; ch < os.c; ++ch) {
          const double* in_c =
              cur.v.data() +
              (static_cast<std::size_t>(n) * cur_shape.c + ch) * cur_shape.h *
                  cur_shape.w;
          double acc = 0.0;
          for (int i = 0; i < cur_shape.h * cur_shape.w; ++i) acc += in_c[i];
          next.v[static_cast<std::size_t>(n) * os.c + ch] = acc * inv;
        }
    } else if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
      next = Tensor({n_batch, dense->out});
      const Tensor& w = params.weights[li];
      const Tensor& b = params.biases[li];
      for (int n = 0; n < n_batch; ++n)
        for (int o = 0; o < dense->out; ++o) {
          double acc = b.v[o];
          const double* w_row = w.v.data() + static_cast<std::size_t>(o) * dense->in;
          const double* in_row = cur.v.data() + static_cast<std::size_t>(n) * dense->in;
          for (int i = 0; i < dense->in; ++i) acc += w_row[i] * in_row[i];
          next.v[static_cast<std::size_t>(n) * dense->out + o] = acc;
        }
    }
    cur = std::move(next);
    cur_shape = os;
    if (trace) trace->act.push_back(cur);
  }
  for (double x : cur.v)
    if (!std::isfinite(x))
      throw TrainingDivergence("forward: non-finite activation", -1);
  return cur;
}

}  // namespace

Params init_params(const NetConfig& config, std::uint64_t seed) {
  config.validate();
  const Rng root(seed);
  Params p;
  p.weights.resize(config.layers.size());
  p.biases.resize(config.layers.size());
  for (std::size_t li = 0; li < config.layers.size(); ++li) {
    const LayerSpec& layer = config.layers[li];
    Rng rng = root.fork(li);
    if (const auto* conv = std::get_if<ConvSpec>(&layer)) {
      p.weights[li] =
          Tensor({conv->out_channels, conv->in_channels, conv->kernel, conv->kernel});
      const double fan_in =
          static_cast<double>(conv->in_channels) * conv->kernel * conv->kernel;
      const double stddev = std::sqrt(2.0 / fan_in);
      for (double& w : p.weights[li].v) w = rng.normal(0.0, stddev);
      p.biases[li] = Tensor({conv->out_channels});
    } else if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
      p.weights[li] = Tensor({dense->out, dense->in});
      const double stddev = std::sqrt(2.0 / static_cast<double>(dense->in));
      for (double& w : p.weights[li].v) w = rng.normal(0.0, stddev);
      p.biases[li] = Tensor({dense->out});
    }
  }
  return p;
}

Params zeros_like(const Params& p) {
  Params out;
  out.weights.reserve(p.weights.size());
  out.biases.reserve(p.biases.size());
  for (const auto& t : p.weights) out.weights.push_back(Tensor(t.shape));
  for (const auto& t : p.biases) out.biases.push_back(Tensor(t.shape));
  return out;
}

Tensor forward(const NetConfig& config, const Params& params, const Tensor& batch) {
  return run_forward(config, params, batch, nullptr);
}

Tensor softmax_rows(const Tensor& scores) {
  if (scores.shape.size() != 2) throw InvalidInput("softmax_rows: expected [N, K]");
  const int n = scores.shape[0], k = scores.shape[1];
  Tensor out = scores;
  for (int r = 0; r < n; ++r) {
    double* row = out.v.data() + static_cast<std::size_t>(r) * k;
    const double mx = *std::max_element(row, row + k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      row[i] = std::exp(row[i] - mx);
      sum += row[i];
    }
    for (int i = 0; i < k; ++i) row[i] /= sum;
  }
  return out;
}

Tensor predict(const NetConfig& config, const Params& params, const Tensor& batch) {
  return softmax_rows(forward(config, params, batch));
}

BackwardResult backward(const NetConfig& config, const Params& params,
                        const Tensor& batch, const std::vector<int>& labels) {
  const int n_batch = batch.shape.empty() ? 0 : batch.shape[0];
  if (static_cast<int>(labels.size()) != n_batch)
    throw InvalidInput("backward: labels/batch size mismatch");
  for (int l : labels)
    if (l < 0 || l >= config.num_classes)
      throw InvalidInput("backward: label out of range");

  Trace trace;
  const Tensor scores = run_forward(config, params, batch, &trace);
  const Tensor probs = softmax_rows(scores);
  const int k = config.num_classes;

  double loss = 0.0;
  Tensor d_cur({n_batch, k});
  const double inv_n = 1.0 / static_cast<double>(n_batch);
  for (int n = 0; n < n_batch; ++n) {
    const double* row = probs.v.data() + static_cast<std::size_t>(n) * k;
    loss -= std::log(std::max(row[labels[n]], 1e-300));
    for (int i = 0; i < k; ++i)
      d_cur.v[static_cast<std::size_t>(n) * k + i] =
          (row[i] - (i == labels[n] ? 1.0 : 0.0)) * inv_n;
  }
  loss *= inv_n;
  if (!std::isfinite(loss)) throw TrainingDivergence("backward: non-finite loss", -1);

  BackwardResult result;
  result.loss = loss;
  result.grads = zeros_like(params);

  const auto shapes = layer_shapes(config);
  int pool_count = 0;
  for (const LayerSpec& layer : config.layers)
    if (std::holds_alternative<MaxPoolSpec>(layer)) ++pool_count;

  for (int li = static_cast<int>(config.layers.size()) - 1; li >= 0; --li) {
    const LayerSpec& layer = config.layers[li];
    const Tensor& input = trace.act[li];
    const Shape is = li == 0 ? Shape{config.in_channels, config.input_size,
                                     config.input_size}
                             : shapes[li - 1];
    const Shape os = shapes[li];
    Tensor d_prev;
    if (const auto* conv = std::get_if<ConvSpec>(&layer)) {
      d_prev = Tensor({n_batch, is.c, is.h, is.w});
      conv_backward(*conv, params.weights[li], input, is, d_cur, os, n_batch, d_prev,
                    result.grads.weights[li], result.grads.biases[li]);
    } else if (std::holds_alternative<ReluSpec>(layer)) {
      d_prev = d_cur;
      for (std::size_t i = 0; i < d_prev.v.size(); ++i)
        if (input.v[i] <= 0.0) d_prev.v[i] = 0.0;
    } else if (std::holds_alternative<MaxPoolSpec>(layer)) {
      --pool_count;
      const std::vector<int>& arg = trace.argmax[pool_count];
      d_prev = Tensor({n_batch, is.c, is.h, is.w});
      std::size_t oi = 0;
      for (int n = 0; n < n_batch; ++n)
        for (int ch = 0; ch < os.c; ++ch) {
          double* din_c = d_prev.v.data() +
                          (static_cast<std::size_t>(n) * is.c + ch) * is.h * is.w;
          for (int i = 0; i < os.h * os.w; ++i, ++oi) din_c[arg[oi]] += d_cur.v[oi];
        }
    } else if (std::holds_alternative<GlobalAvgPoolSpec>(layer)) {
      d_prev = Tensor({n_batch, is.c, is.h, is.w});
      const double inv = 1.0 / (static_cast<double>(is.h) * is.w);
      for (int n = 0; n < n_batch; ++n)
        for (int ch = 0; ch < is.c; ++ch) {
          const double g =
              d_cur.v[static_cast<std::size_t>(n) * os.c + ch] * inv;
          double* din_c = d_prev.v.data() +
                          (static_cast<std::size_t>(n) * is.c + ch) * is.h * is.w;
          for (int i = 0; i < is.h * is.w; ++i) din_c[i] += g;
        }
    } else if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
      d_prev = Tensor({n_batch, dense->in});
      Tensor& d_w = result.grads.weights[li];
      Tensor& d_b = result.grads.biases[li];
      for (int n = 0; n < n_batch; ++n) {
        const double* in_row = input.v.data() + static_cast<std::size_t>(n) * dense->in;
        const double* g_row = d_cur.v.data() + static_cast<std::size_t>(n) * dense->out;
        double* dprev_row = d_prev.v.data() + static_cast<std::size_t>(n) * dense->in;
        for (int o = 0; o < dense->out; ++o) {
          const double g = g_row[o];
          d_b.v[o] += g;
          double* dw_row = d_w.v.data() + static_cast<std::size_t>(o) * dense->in;
          const double* w_row =
              params.weights[li].v.data() + static_cast<std::size_t>(o) * dense->in;
          for (int i = 0; i < dense->in; ++i) {
            dw_row[i] += g * in_row[i];
            dprev_row[i] += g * w_row[i];
          }
        }
      }
    }
    d_cur = std::move(d_prev);
  }
  return result;
}

}  // namespace phaselab
