#include "phaselab/eval/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "phaselab/core/error.hpp"
#include "phaselab/core/hash.hpp"
#include "phaselab/core/parallel.hpp"
#include "phaselab/spectral/io.hpp"

namespace phaselab {
namespace {

double mean_of(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(v.size()));
}

std::vector<double> positive_probs(const Tensor& probs) {
  std::vector<double> out(probs.shape[0]);
  for (int i = 0; i < probs.shape[0]; ++i)
    out[i] = probs.v[static_cast<std::size_t>(i) * probs.shape[1] + 1];
  return out;
}

struct TrainedEval {
  double indist_auc = 0.0;
  double cross_auc = 0.0;
};

TrainedEval run_one(const NetConfig& net, const TrainConfig& tc, const Dataset& train_set,
                    const Dataset& val_set, const Dataset& test_set) {
  const TrainResult result = train(net, tc, train_set, val_set);
  TrainedEval ev;
  const Tensor val_probs = predict_dataset(net, result.params, val_set);
  const Tensor test_probs = predict_dataset(net, result.params, test_set);
  ev.indist_auc = auc_roc(positive_probs(val_probs), val_set.labels);
  ev.cross_auc = auc_roc(positive_probs(test_probs), test_set.labels);
  return ev;
}

}  // namespace

double AblationCell::mean_cross() const { return mean_of(cross_auc); }
double AblationCell::std_cross() const { return std_of(cross_auc); }
double AblationCell::mean_indist() const { return mean_of(indist_auc); }

std::vector<AblationCell> ablation_matrix(const CorpusManifest& manifest,
                                          const std::filesystem::path& corpus_dir,
                                          const std::vector<std::uint64_t>& seeds,
                                          const ExperimentOptions& opts) {
  if (seeds.empty()) throw InvalidInput("ablation_matrix: no seeds");

  // Both input modes share the stored images; load each variant once.
  const Dataset rgb_train = load_split(manifest, corpus_dir, "train", InputMode::kRgb);
  const Dataset rgb_val = load_split(manifest, corpus_dir, "val", InputMode::kRgb);
  const Dataset rgb_test = load_split(manifest, corpus_dir, "test", InputMode::kRgb);
  const Dataset rgbp_train =
      load_split(manifest, corpus_dir, "train", InputMode::kRgbp, opts.phase_mode);
  const Dataset rgbp_val =
      load_split(manifest, corpus_dir, "val", InputMode::kRgbp, opts.phase_mode);
  const Dataset rgbp_test =
      load_split(manifest, corpus_dir, "test", InputMode::kRgbp, opts.phase_mode);

  const std::pair<bool, bool> grid[4] = {
      {false, false}, {true, false}, {false, true}, {true, true}};
  std::vector<AblationCell> cells(4);
  for (int c = 0; c < 4; ++c) {
    cells[c].phase_on = grid[c].first;
    cells[c].shallow_on = grid[c].second;
    cells[c].indist_auc.resize(seeds.size());
    cells[c].cross_auc.resize(seeds.size());
  }

  const std::size_t jobs = 4 * seeds.size();
  std::vector<std::string> failures(jobs);
  parallel_for(
      jobs,
      [&](std::size_t job) {
        const int c = static_cast<int>(job / seeds.size());
        const std::size_t s = job % seeds.size();
        const bool phase_on = grid[c].first;
        const bool shallow_on = grid[c].second;
        try {
          const NetConfig net = make_profile_config(
              shallow_on ? DepthProfile::kShallow : DepthProfile::kDeep,
              phase_on ? 4 : 3, manifest.params.size, 2);
          TrainConfig tc = opts.train;
          tc.seed = seeds[s];
          const TrainedEval ev = run_one(
              net, tc, phase_on ? rgbp_train : rgb_train,
              phase_on ? rgbp_val : rgb_val, phase_on ? rgbp_test : rgb_test);
          cells[c].indist_auc[s] = ev.indist_auc;
          cells[c].cross_auc[s] = ev.cross_auc;
        } catch (const std::exception& e) {
          failures[job] = std::string("cell(phase=") + (phase_on ? "on" : "off") +
                          ",shallow=" + (shallow_on ? "on" : "off") + ",seed=" +
                          std::to_string(seeds[s]) + "): " + e.what();
        }
      },
      opts.threads);

  for (const auto& f : failures)
    if (!f.empty()) throw Error("ablation_matrix: " + f);
  return cells;
}

namespace {

std::string options_stamp(const CorpusManifest& manifest, const ExperimentOptions& opts,
                          const std::vector<std::uint64_t>& seeds) {
  std::ostringstream meta;
  meta << "corpus_mode="
       << (manifest.params.cross_distribution ? "cross-distribution" : "in-distribution")
       << ";global_seed=" << manifest.global_seed << ";lr=" << opts.train.learning_rate
       << ";epochs=" << opts.train.max_epochs << ";batch=" << opts.train.batch_size
       << ";phase_mode="
       << (opts.phase_mode == PhaseMode::kAbsPhase ? "abs-phase" : "unit-amplitude")
       << ";seeds=";
  for (std::uint64_t s : seeds) meta << s << "+";
  return meta.str();
}

}  // namespace

std::string ablation_csv(const std::vector<AblationCell>& cells,
                         const CorpusManifest& manifest,
                         const std::vector<std::uint64_t>& seeds,
                         const ExperimentOptions& opts) {
  std::ostringstream out;
  out.precision(10);
  const std::string stamp = options_stamp(manifest, opts, seeds);
  out << "# config_hash=" << config_hash(stamp) << "\n";
  out << "# " << stamp << "\n";
  out << "phase,shallow,seed,indist_auc,cross_auc\n";
  for (const auto& cell : cells) {
    for (std::size_t s = 0; s < seeds.size(); ++s)
      out << (cell.phase_on ? "on" : "off") << "," << (cell.shallow_on ? "on" : "off")
          << "," << seeds[s] << "," << cell.indist_auc[s] << "," << cell.cross_auc[s]
          << "\n";
    out << (cell.phase_on ? "on" : "off") << "," << (cell.shallow_on ? "on" : "off")
        << ",mean," << cell.mean_indist() << "," << cell.mean_cross() << "\n";
    out << (cell.phase_on ? "on" : "off") << "," << (cell.shallow_on ? "on" : "off")
        << ",std," << std_of(cell.indist_auc) << "," << cell.std_cross() << "\n";
  }
  return out.str();
}

std::vector<DepthSweepRow> depth_sweep(const CorpusManifest& manifest,
                                       const std::filesystem::path& corpus_dir,
                                       const std::vector<int>& depths,
                                       const std::vector<std::uint64_t>& seeds,
                                       const ExperimentOptions& opts) {
  if (depths.empty() || seeds.empty())
    throw InvalidInput("depth_sweep: depths and seeds must be non-empty");
  for (int d : depths)
    if (d < 1) throw InvalidInput("depth_sweep: depths must be >= 1");

  const Dataset train_set =
      load_split(manifest, corpus_dir, "train", InputMode::kRgbp, opts.phase_mode);
  const Dataset val_set =
      load_split(manifest, corpus_dir, "val", InputMode::kRgbp, opts.phase_mode);
  const Dataset test_set =
      load_split(manifest, corpus_dir, "test", InputMode::kRgbp, opts.phase_mode);

  std::vector<DepthSweepRow> rows(depths.size() * seeds.size());
  std::vector<std::string> failures(rows.size());
  parallel_for(
      rows.size(),
      [&](std::size_t job) {
        const int depth = depths[job / seeds.size()];
        const std::uint64_t seed = seeds[job % seeds.size()];
        try {
          const NetConfig net = make_depth_config(depth, 4, manifest.params.size, 2);
          TrainConfig tc = opts.train;
          tc.seed = seed;
          const TrainedEval ev = run_one(net, tc, train_set, val_set, test_set);
          rows[job] = DepthSweepRow{depth, receptive_field(net).at_head().rf, seed,
                                    ev.indist_auc, ev.cross_auc};
        } catch (const std::exception& e) {
          failures[job] = "depth " + std::to_string(depth) + " seed " +
                          std::to_string(seed) + ": " + e.what();
        }
      },
      opts.threads);
  for (const auto& f : failures)
    if (!f.empty()) throw Error("depth_sweep: " + f);
  return rows;
}

std::string depth_sweep_csv(const std::vector<DepthSweepRow>& rows,
                            const CorpusManifest& manifest,
                            const ExperimentOptions& opts) {
  std::ostringstream out;
  out.precision(10);
  const std::string stamp = options_stamp(manifest, opts, {});
  out << "# config_hash=" << config_hash(stamp) << "\n";
  out << "# " << stamp << "\n";
  out << "depth,rf,seed,indist_auc,cross_auc\n";
  for (const auto& r : rows)
    out << r.depth << "," << r.rf << "," << r.seed << "," << r.indist_auc << ","
        << r.cross_auc << "\n";
  // per-depth aggregates over seeds
  std::map<int, std::vector<const DepthSweepRow*>> by_depth;
  for (const auto& r : rows) by_depth[r.depth].push_back(&r);
  for (const auto& [depth, group] : by_depth) {
    std::vector<double> indist, cross;
    for (const auto* r : group) {
      indist.push_back(r->indist_auc);
      cross.push_back(r->cross_auc);
    }
    out << depth << "," << group.front()->rf << ",mean," << mean_of(indist) << ","
        << mean_of(cross) << "\n";
  }
  return out.str();
}

FingerprintReport phase_fingerprint(const CorpusManifest& manifest,
                                    const std::filesystem::path& corpus_dir,
                                    const std::string& split, PhaseMode mode,
                                    int min_group) {
  std::map<std::string, std::vector<const CorpusEntry*>> groups;
  for (const auto& e : manifest.entries) {
    if (!split.empty() && e.split != split) continue;
    groups[e.recipe ? e.recipe->kernel : "pristine"].push_back(&e);
  }
  if (groups.size() < 2)
    throw InvalidInput("phase_fingerprint: need at least two recipe groups");
  for (const auto& [kind, members] : groups)
    if (static_cast<int>(members.size()) < min_group)
      throw InvalidInput("phase_fingerprint: group '" + kind + "' has fewer than " +
                         std::to_string(min_group) + " samples");

  const int size = manifest.params.size;
  const std::size_t npix = static_cast<std::size_t>(size) * size;
  FingerprintReport report;

  for (const auto& [kind, members] : groups) {
    std::vector<std::vector<double>> sums(3, std::vector<double>(npix, 0.0));
    int counts[3] = {0, 0, 0};  // full, half A, half B
    for (std::size_t i = 0; i < members.size(); ++i) {
      const ImageGrid img = read_image(corpus_dir / members[i]->path);
      const ImageGrid pm = phase_only_image(img, mode);
      const int half = i % 2 == 0 ? 1 : 2;
      for (std::size_t px = 0; px < npix; ++px) {
        sums[0][px] += pm.data()[px];
        sums[half][px] += pm.data()[px];
      }
      ++counts[0];
      ++counts[half];
    }
    FingerprintGroup g;
    g.kind = kind;
    g.count = counts[0];
    auto to_image = [&](const std::vector<double>& sum, int cnt) {
      std::vector<double> mean(npix);
      for (std::size_t px = 0; px < npix; ++px)
        mean[px] = sum[px] / static_cast<double>(cnt);
      return ImageGrid::from_data_clamped(size, size, 1, std::move(mean));
    };
    g.mean_phase = to_image(sums[0], counts[0]);
    g.half_a_mean = to_image(sums[1], counts[1]);
    g.half_b_mean = to_image(sums[2], counts[2]);
    report.groups.push_back(std::move(g));
  }

  auto l2 = [&](const ImageGrid& a, const ImageGrid& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < npix; ++i) {
      const double d = a.data()[i] - b.data()[i];
      acc += d * d;
    }
    return std::sqrt(acc);
  };

  double intra = 0.0;
  for (const auto& g : report.groups) intra += l2(g.half_a_mean, g.half_b_mean);
  intra /= static_cast<double>(report.groups.size());

  double inter = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < report.groups.size(); ++i)
    for (std::size_t j = i + 1; j < report.groups.size(); ++j) {
      inter += l2(report.groups[i].mean_phase, report.groups[j].mean_phase);
      ++pairs;
    }
  inter /= static_cast<double>(pairs);

  report.intra_group_mean = intra;
  report.inter_group_mean = inter;
  report.score = intra > 0.0 ? inter / intra
                             : std::numeric_limits<double>::infinity();
  return report;
}

std::string FingerprintReport::to_csv() const {
  std::ostringstream out;
  out.precision(10);
  out << "group,count\n";
  for (const auto& g : groups) out << g.kind << "," << g.count << "\n";
  out << "inter_group_mean_l2," << inter_group_mean << "\n";
  out << "intra_group_mean_l2," << intra_group_mean << "\n";
  out << "distinguishability," << score << "\n";
  return out.str();
}

}  // namespace phaselab
