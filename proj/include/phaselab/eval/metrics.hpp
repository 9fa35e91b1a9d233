#pragma once

#include <map>
#include <string>
#include <vector>

#include "phaselab/net/tensor.hpp"

namespace phaselab {

// Fraction of rows whose argmax matches the label.
double accuracy(const Tensor& scores, const std::vector<int>& labels);

// Mann-Whitney statistic: the fraction of (positive, negative) pairs where
// the positive scores higher, ties counted half. Computed from average ranks
// in O(n log n); equals the pairwise count exactly, ties included.
double auc_roc(const std::vector<double>& positive_scores,
               const std::vector<int>& labels);

// Recall per class from argmax predictions; classes without samples are
// absent from the map rather than reported as zero.
std::map<int, double> recall_per_class(const std::vector<int>& predictions,
                                       const std::vector<int>& labels,
                                       int class_count);

std::vector<int> argmax_rows(const Tensor& scores);

// Bundled evaluation results plus the identifiers that make a run traceable.
struct MetricsReport {
  double acc = 0.0;
  double auc = 0.0;
  std::map<int, double> recall;
  int sample_count = 0;
  std::string input_mode;
  std::string depth_profile;
  std::string corpus_mode;
  std::uint64_t seed = 0;
  std::string config_hash;

  std::string to_csv() const;
};

MetricsReport evaluate_metrics(const Tensor& probs, const std::vector<int>& labels,
                               int class_count);

}  // namespace phaselab
