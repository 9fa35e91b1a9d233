#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "phaselab/net/model.hpp"
#include "phaselab/spectral/phase.hpp"
#include "phaselab/synth/corpus.hpp"

namespace phaselab {

struct AdamState;

// Adam with the usual bias correction.
class Adam {
 public:
  Adam(double beta1 = 0.9, double beta2 = 0.999, double epsilon = 1e-8);
  ~Adam();
  Adam(Adam&&) noexcept;
  Adam& operator=(Adam&&) noexcept;

  void step(Params& params, const Params& grads, double lr);

 private:
  double beta1_, beta2_, epsilon_;
  std::unique_ptr<AdamState> state_;
};

// Halves the rate after `patience` consecutive epochs without a strict
// improvement of the validation loss; an improvement resets the counter.
class PlateauScheduler {
 public:
  PlateauScheduler(double initial_lr, int patience = 5, double factor = 0.5);

  // Feed one epoch's validation loss; returns the rate for the next epoch.
  double observe(double val_loss);
  double lr() const { return lr_; }

 private:
  double lr_;
  int patience_;
  double factor_;
  double best_;
  int stale_epochs_ = 0;
};

struct TrainConfig {
  double learning_rate = 2e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int plateau_patience = 5;
  double plateau_factor = 0.5;
  int batch_size = 32;
  int max_epochs = 100;
  double min_lr = 1e-5;  // stop once the schedule drops below this
  std::uint64_t seed = 0;
};

struct EpochLog {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double lr = 0.0;
};

struct TrainResult {
  Params params;
  std::vector<EpochLog> log;

  std::string log_csv() const;  // epoch,train_loss,val_loss,lr
};

// In-memory split: images [N, C, H, W] plus integer labels.
struct Dataset {
  Tensor images;
  std::vector<int> labels;

  int size() const { return images.shape.empty() ? 0 : images.shape[0]; }
};

enum class InputMode { kRgb, kRgbp };

std::string to_string(InputMode mode);

// Reads one corpus split into memory. kRgbp appends the phase channel
// computed from each stored image.
Dataset load_split(const CorpusManifest& manifest,
                   const std::filesystem::path& corpus_dir, const std::string& split,
                   InputMode mode, PhaseMode phase_mode = PhaseMode::kAbsPhase);

// Full loop: shuffled mini-batches (order is a pure function of the seed),
// Adam updates, plateau halving driven by the per-epoch validation loss.
// Stops at max_epochs or when the rate falls below min_lr. Throws
// TrainingDivergence carrying the last completed epoch if the loss goes NaN.
TrainResult train(const NetConfig& net, const TrainConfig& tc, const Dataset& train_set,
                  const Dataset& val_set);

// Mean loss without gradients, for validation.
double evaluate_loss(const NetConfig& net, const Params& params, const Dataset& data,
                     int batch_size = 64);

// Class probabilities for a whole dataset, batched.
Tensor predict_dataset(const NetConfig& net, const Params& params, const Dataset& data,
                       int batch_size = 64);

// Flat binary checkpoint with a JSON header carrying shapes, the config hash
// and the seed.
void save_checkpoint(const std::filesystem::path& path, const NetConfig& config,
                     const Params& params, std::uint64_t seed);
struct Checkpoint {
  NetConfig config;
  Params params;
  std::uint64_t seed = 0;
  std::string config_hash;
};
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace phaselab
