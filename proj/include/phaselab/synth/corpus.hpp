#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "phaselab/synth/forgery.hpp"
#include "phaselab/synth/texture.hpp"

namespace phaselab {

struct RecipeDescriptor {
  std::string kernel;  // resample kind used in the down/up chain
  int times = 1;       // chain repetitions
};

struct CorpusEntry {
  int id = 0;
  std::string path;  // relative to the corpus root
  Label label = Label::kPristine;
  std::optional<RecipeDescriptor> recipe;
  std::string split;  // train | val | test
  std::uint64_t seed = 0;
  std::string compression;
  std::string texture;
};

struct CorpusParams {
  int per_class = 2000;
  int size = 64;
  double train_frac = 0.7;
  double val_frac = 0.15;  // remainder is test
  // Held-out-kernel mode: the test split draws forgeries only from
  // test_kernels, which are absent from train/val.
  bool cross_distribution = false;
  std::vector<ResampleKind> train_kernels{ResampleKind::kBilinear,
                                          ResampleKind::kNearest,
                                          ResampleKind::kBicubic};
  std::vector<ResampleKind> held_out_kernels{ResampleKind::kBicubic};
  std::vector<int> chain_lengths{1, 2, 3};
};

struct CorpusManifest {
  std::uint64_t global_seed = 0;
  CorpusParams params;
  std::vector<CorpusEntry> entries;

  std::vector<const CorpusEntry*> split_entries(const std::string& split) const;
  std::string to_json() const;
  static CorpusManifest from_json(const std::string& text);
};

// Generates every sample, writes lossless rasters under
// out_dir/{train,val,test}/{pristine,forged}/NNNN.ppm plus manifest.json.
// Pure function of (params, global_seed): re-running reproduces the corpus
// byte for byte.
CorpusManifest build_corpus(const CorpusParams& params, std::uint64_t global_seed,
                            const std::filesystem::path& out_dir);

CorpusManifest load_manifest(const std::filesystem::path& corpus_dir);

// The deterministic sample generator behind build_corpus, exposed so tests
// and in-memory consumers can regenerate single entries.
ImageGrid generate_entry_image(const CorpusEntry& entry, const CorpusParams& params);

}  // namespace phaselab
