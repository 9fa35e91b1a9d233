#include "phaselab/eval/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "phaselab/core/error.hpp"

namespace phaselab {

std::vector<int> argmax_rows(const Tensor& scores) {
  if (scores.shape.size() != 2) throw InvalidInput("argmax_rows: expected [N, K]");
  const int n = scores.shape[0], k = scores.shape[1];
  std::vector<int> out(n);
  for (int r = 0; r < n; ++r) {
    const double* row = scores.v.data() + static_cast<std::size_t>(r) * k;
    out[r] = static_cast<int>(std::max_element(row, row + k) - row);
  }
  return out;
}

double accuracy(const Tensor& scores, const std::vector<int>& labels) {
  if (scores.shape.empty() || scores.shape[0] == 0)
    throw InvalidInput("accuracy: empty input");
  if (static_cast<std::size_t>(scores.shape[0]) != labels.size())
    throw InvalidInput("accuracy: scores/labels length mismatch");
  const std::vector<int> pred = argmax_rows(scores);
  int correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (pred[i] == labels[i]) ++correct;
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

double auc_roc(const std::vector<double>& positive_scores,
               const std::vector<int>& labels) {
  if (positive_scores.size() != labels.size())
    throw InvalidInput("auc_roc: scores/labels length mismatch");
  const std::size_t n = positive_scores.size();
  std::size_t n_pos = 0;
  for (int l : labels) n_pos += l != 0 ? 1 : 0;
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0)
    throw UndefinedMetric("auc_roc: both classes must be present");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return positive_scores[a] < positive_scores[b];
  });

  // Average ranks over tie groups; (a+b)/2 with integer a, b is exact in
  // binary, so this matches the brute-force pairwise statistic bit for bit.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && positive_scores[order[j]] == positive_scores[order[i]]) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t)
      if (labels[order[t]] != 0) rank_sum_pos += avg_rank;
    i = j;
  }
  const double u = rank_sum_pos -
                   static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

std::map<int, double> recall_per_class(const std::vector<int>& predictions,
                                       const std::vector<int>& labels,
                                       int class_count) {
  if (predictions.size() != labels.size())
    throw InvalidInput("recall_per_class: length mismatch");
  for (int l : labels)
    if (l < 0 || l >= class_count)
      throw InvalidInput("recall_per_class: label out of range");
  std::vector<int> total(class_count, 0), correct(class_count, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ++total[labels[i]];
    if (predictions[i] == labels[i]) ++correct[labels[i]];
  }
  std::map<int, double> out;
  for (int c = 0; c < class_count; ++c)
    if (total[c] > 0)
      out[c] = static_cast<double>(correct[c]) / static_cast<double>(total[c]);
  return out;
}

MetricsReport evaluate_metrics(const Tensor& probs, const std::vector<int>& labels,
                               int class_count) {
  MetricsReport report;
  report.sample_count = static_cast<int>(labels.size());
  report.acc = accuracy(probs, labels);
  const std::vector<int> pred = argmax_rows(probs);
  report.recall = recall_per_class(pred, labels, class_count);
  if (class_count == 2) {
    std::vector<double> pos(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      pos[i] = probs.v[i * 2 + 1];
    report.auc = auc_roc(pos, labels);
  }
  return report;
}

std::string MetricsReport::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "metric,value\n";
  out << "acc," << acc << "\n";
  out << "auc," << auc << "\n";
  for (const auto& [cls, r] : recall) out << "recall_" << cls << "," << r << "\n";
  out << "samples," << sample_count << "\n";
  out << "input_mode," << input_mode << "\n";
  out << "depth_profile," << depth_profile << "\n";
  out << "corpus_mode," << corpus_mode << "\n";
  out << "seed," << seed << "\n";
  out << "config_hash," << config_hash << "\n";
  return out.str();
}

}  // namespace phaselab
