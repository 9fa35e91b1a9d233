#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "phaselab/eval/metrics.hpp"
#include "phaselab/net/train.hpp"

namespace phaselab {

// Shared knobs for every trained comparison. Seeds vary per run; everything
// else is fixed so cells stay comparable.
struct ExperimentOptions {
  TrainConfig train;
  PhaseMode phase_mode = PhaseMode::kAbsPhase;
  unsigned threads = 0;  // parallel (cell, seed) jobs; each job is sequential
};

// One row of the 2x2 phase/shallow grid, evaluated on the validation split
// (in-distribution) and the test split (held-out kernel when the corpus is in
// cross-distribution mode).
struct AblationCell {
  bool phase_on = false;
  bool shallow_on = false;
  std::vector<double> indist_auc;  // per seed
  std::vector<double> cross_auc;   // per seed

  double mean_cross() const;
  double std_cross() const;
  double mean_indist() const;
};

std::vector<AblationCell> ablation_matrix(const CorpusManifest& manifest,
                                          const std::filesystem::path& corpus_dir,
                                          const std::vector<std::uint64_t>& seeds,
                                          const ExperimentOptions& opts);

std::string ablation_csv(const std::vector<AblationCell>& cells,
                         const CorpusManifest& manifest,
                         const std::vector<std::uint64_t>& seeds,
                         const ExperimentOptions& opts);

struct DepthSweepRow {
  int depth = 0;
  int rf = 0;  // at the classification head
  std::uint64_t seed = 0;
  double indist_auc = 0.0;
  double cross_auc = 0.0;
};

std::vector<DepthSweepRow> depth_sweep(const CorpusManifest& manifest,
                                       const std::filesystem::path& corpus_dir,
                                       const std::vector<int>& depths,
                                       const std::vector<std::uint64_t>& seeds,
                                       const ExperimentOptions& opts);

std::string depth_sweep_csv(const std::vector<DepthSweepRow>& rows,
                            const CorpusManifest& manifest,
                            const ExperimentOptions& opts);

// Mean phase-only image per recipe group (forged samples keyed by kernel,
// pristine samples forming their own group).
struct FingerprintGroup {
  std::string kind;
  int count = 0;
  ImageGrid mean_phase;
  ImageGrid half_a_mean;  // disjoint halves, for the intra-group baseline
  ImageGrid half_b_mean;
};

struct FingerprintReport {
  std::vector<FingerprintGroup> groups;
  double inter_group_mean = 0.0;  // mean pairwise L2 between group means
  double intra_group_mean = 0.0;  // mean L2 between half-means within groups
  double score = 0.0;             // inter / intra

  std::string to_csv() const;
};

FingerprintReport phase_fingerprint(const CorpusManifest& manifest,
                                    const std::filesystem::path& corpus_dir,
                                    const std::string& split,
                                    PhaseMode mode = PhaseMode::kAbsPhase,
                                    int min_group = 10);

}  // namespace phaselab
