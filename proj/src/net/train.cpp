#include "phaselab/net/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phaselab/core/error.hpp"
#include "phaselab/core/hash.hpp"
#include "phaselab/core/rng.hpp"
#include "phaselab/spectral/io.hpp"

namespace phaselab {

struct AdamState {
  Params m, v;
  long t = 0;
  bool ready = false;
};

Adam::Adam(double beta1, double beta2, double epsilon)
    : beta1_(beta1), beta2_(beta2), epsilon_(epsilon),
      state_(std::make_unique<AdamState>()) {}
Adam::~Adam() = default;
Adam::Adam(Adam&&) noexcept = default;
Adam& Adam::operator=(Adam&&) noexcept = default;

void Adam::step(Params& params, const Params& grads, double lr) {
  AdamState& s = *state_;
  if (!s.ready) {
    s.m = zeros_like(params);
    s.v = zeros_like(params);
    s.ready = true;
  }
  ++s.t;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(s.t));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(s.t));
  auto update = [&](std::vector<Tensor>& p, const std::vector<Tensor>& g,
                    std::vector<Tensor>& m, std::vector<Tensor>& v) {
    for (std::size_t li = 0; li < p.size(); ++li) {
      for (std::size_t i = 0; i < p[li].v.size(); ++i) {
        double& mi = m[li].v[i];
        double& vi = v[li].v[i];
        const double gi = g[li].v[i];
        mi = beta1_ * mi + (1.0 - beta1_) * gi;
        vi = beta2_ * vi + (1.0 - beta2_) * gi * gi;
        const double mhat = mi / bc1;
        const double vhat = vi / bc2;
        p[li].v[i] -= lr * mhat / (std::sqrt(vhat) + epsilon_);
      }
    }
  };
  update(params.weights, grads.weights, s.m.weights, s.v.weights);
  update(params.biases, grads.biases, s.m.biases, s.v.biases);
}

PlateauScheduler::PlateauScheduler(double initial_lr, int patience, double factor)
    : lr_(initial_lr), patience_(patience), factor_(factor),
      best_(std::numeric_limits<double>::infinity()) {
  if (initial_lr <= 0.0) throw InvalidConfig("PlateauScheduler: lr must be > 0");
  if (patience < 1) throw InvalidConfig("PlateauScheduler: patience must be >= 1");
}

double PlateauScheduler::observe(double val_loss) {
  if (val_loss < best_) {
    best_ = val_loss;
    stale_epochs_ = 0;
  } else {
    ++stale_epochs_;
    if (stale_epochs_ >= patience_) {
      lr_ *= factor_;
      stale_epochs_ = 0;
    }
  }
  return lr_;
}

std::string to_string(InputMode mode) {
  return mode == InputMode::kRgb ? "rgb" : "rgbp";
}

Dataset load_split(const CorpusManifest& manifest,
                   const std::filesystem::path& corpus_dir, const std::string& split,
                   InputMode mode, PhaseMode phase_mode) {
  const auto entries = manifest.split_entries(split);
  if (entries.empty()) throw InvalidInput("load_split: no entries in split " + split);
  const int size = manifest.params.size;
  const int channels = mode == InputMode::kRgbp ? 4 : 3;
  Dataset out;
  out.images = Tensor({static_cast<int>(entries.size()), channels, size, size});
  out.labels.resize(entries.size());
  const std::size_t plane = static_cast<std::size_t>(size) * size;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ImageGrid img = read_image(corpus_dir / entries[i]->path);
    if (img.height() != size || img.width() != size || img.channels() != 3)
      throw IoError("load_split: unexpected image geometry at " + entries[i]->path);
    double* dst = out.images.v.data() + i * channels * plane;
    std::memcpy(dst, img.data().data(), 3 * plane * sizeof(double));
    if (mode == InputMode::kRgbp) {
      const ImageGrid p = phase_only_image(img, phase_mode);
      std::memcpy(dst + 3 * plane, p.data().data(), plane * sizeof(double));
    }
    out.labels[i] = entries[i]->label == Label::kForged ? 1 : 0;
  }
  return out;
}

namespace {

Tensor gather_batch(const Dataset& data, const std::vector<int>& order, int begin,
                    int end, std::vector<int>* labels) {
  const int c = data.images.shape[1], h = data.images.shape[2],
            w = data.images.shape[3];
  const std::size_t stride = static_cast<std::size_t>(c) * h * w;
  Tensor batch({end - begin, c, h, w});
  labels->resize(end - begin);
  for (int i = begin; i < end; ++i) {
    const int src = order[i];
    std::memcpy(batch.v.data() + static_cast<std::size_t>(i - begin) * stride,
                data.images.v.data() + static_cast<std::size_t>(src) * stride,
                stride * sizeof(double));
    (*labels)[i - begin] = data.labels[src];
  }
  return batch;
}

}  // namespace

double evaluate_loss(const NetConfig& net, const Params& params, const Dataset& data,
                     int batch_size) {
  const int n = data.size();
  double total = 0.0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> labels;
  for (int begin = 0; begin < n; begin += batch_size) {
    const int end = std::min(n, begin + batch_size);
    const Tensor batch = gather_batch(data, order, begin, end, &labels);
    const Tensor probs = predict(net, params, batch);
    for (int i = 0; i < end - begin; ++i) {
      const double p =
          probs.v[static_cast<std::size_t>(i) * net.num_classes + labels[i]];
      total -= std::log(std::max(p, 1e-300));
    }
  }
  return total / static_cast<double>(n);
}

Tensor predict_dataset(const NetConfig& net, const Params& params, const Dataset& data,
                       int batch_size) {
  const int n = data.size();
  Tensor out({n, net.num_classes});
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> labels;
  for (int begin = 0; begin < n; begin += batch_size) {
    const int end = std::min(n, begin + batch_size);
    const Tensor batch = gather_batch(data, order, begin, end, &labels);
    const Tensor probs = predict(net, params, batch);
    std::copy(probs.v.begin(), probs.v.end(),
              out.v.begin() + static_cast<std::size_t>(begin) * net.num_classes);
  }
  return out;
}

TrainResult train(const NetConfig& net, const TrainConfig& tc, const Dataset& train_set,
                  const Dataset& val_set) {
  net.validate();
  if (tc.learning_rate <= 0.0) throw InvalidConfig("train: learning rate must be > 0");
  if (tc.batch_size < 1) throw InvalidConfig("train: batch size must be >= 1");
  if (train_set.size() == 0 || val_set.size() == 0)
    throw InvalidInput("train: empty split");

  const Rng root(tc.seed);
  TrainResult result;
  result.params = init_params(net, root.fork(1).seed());
  Adam adam(tc.beta1, tc.beta2, tc.epsilon);
  PlateauScheduler scheduler(tc.learning_rate, tc.plateau_patience, tc.plateau_factor);

  const int n = train_set.size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  Rng shuffle_rng = root.fork(2);

  double lr = tc.learning_rate;
  for (int epoch = 1; epoch <= tc.max_epochs; ++epoch) {
    // Fisher-Yates on a fixed stream: the data order is a function of the
    // seed and epoch index only.
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(shuffle_rng.uniform_int(0, i));
      std::swap(order[i], order[j]);
    }
    double train_loss = 0.0;
    int batches = 0;
    std::vector<int> labels;
    try {
      for (int begin = 0; begin < n; begin += tc.batch_size) {
        const int end = std::min(n, begin + tc.batch_size);
        const Tensor batch = gather_batch(train_set, order, begin, end, &labels);
        BackwardResult step = backward(net, result.params, batch, labels);
        adam.step(result.params, step.grads, lr);
        train_loss += step.loss * (end - begin);
        ++batches;
      }
    } catch (const TrainingDivergence&) {
      throw TrainingDivergence("train: loss diverged during epoch " +
                                   std::to_string(epoch),
                               epoch - 1);
    }
    train_loss /= static_cast<double>(n);
    const double val_loss = evaluate_loss(net, result.params, val_set, 64);
    result.log.push_back(EpochLog{epoch, train_loss, val_loss, lr});
    lr = scheduler.observe(val_loss);
    if (lr < tc.min_lr) break;
  }
  return result;
}

std::string TrainResult::log_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "epoch,train_loss,val_loss,lr\n";
  for (const auto& e : log)
    out << e.epoch << "," << e.train_loss << "," << e.val_loss << "," << e.lr << "\n";
  return out.str();
}

namespace {

constexpr char kCheckpointMagic[] = "PHASELAB-CKPT-1";

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const NetConfig& config,
                     const Params& params, std::uint64_t seed) {
  nlohmann::json header;
  const std::string cfg_json = net_config_to_json(config);
  header["config"] = nlohmann::json::parse(cfg_json);
  header["config_hash"] = config_hash(config.describe());
  header["seed"] = seed;
  nlohmann::json shapes = nlohmann::json::array();
  for (std::size_t li = 0; li < params.weights.size(); ++li)
    shapes.push_back({{"layer", li},
                      {"weight", params.weights[li].shape},
                      {"bias", params.biases[li].shape}});
  header["shapes"] = shapes;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  const std::string head = header.dump();
  out << kCheckpointMagic << "\n" << head << "\n";
  auto dump = [&](const std::vector<Tensor>& ts) {
    for (const auto& t : ts)
      out.write(reinterpret_cast<const char*>(t.v.data()),
                static_cast<std::streamsize>(t.v.size() * sizeof(double)));
  };
  dump(params.weights);
  dump(params.biases);
  if (!out) throw IoError("write failed: " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint: " + path.string());
  std::string magic, head;
  std::getline(in, magic);
  if (magic != kCheckpointMagic)
    throw IoError("not a checkpoint file: " + path.string());
  std::getline(in, head);
  const nlohmann::json header = nlohmann::json::parse(head);
  Checkpoint ckpt;
  ckpt.config = net_config_from_json(header.at("config").dump());
  ckpt.seed = header.at("seed").get<std::uint64_t>();
  ckpt.config_hash = header.at("config_hash").get<std::string>();
  ckpt.params.weights.resize(ckpt.config.layers.size());
  ckpt.params.biases.resize(ckpt.config.layers.size());
  for (const auto& s : header.at("shapes")) {
    const std::size_t li = s.at("layer").get<std::size_t>();
    ckpt.params.weights[li] = Tensor(s.at("weight").get<std::vector<int>>());
    ckpt.params.biases[li] = Tensor(s.at("bias").get<std::vector<int>>());
  }
  auto slurp = [&](std::vector<Tensor>& ts) {
    for (auto& t : ts) {
      in.read(reinterpret_cast<char*>(t.v.data()),
              static_cast<std::streamsize>(t.v.size() * sizeof(double)));
      if (static_cast<std::size_t>(in.gcount()) != t.v.size() * sizeof(double))
        throw IoError("truncated checkpoint: " + path.string());
    }
  };
  slurp(ckpt.params.weights);
  slurp(ckpt.params.biases);
  return ckpt;
}

}  // namespace phaselab
