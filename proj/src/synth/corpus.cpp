#include "phaselab/synth/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phaselab/core/error.hpp"
#include "phaselab/core/parallel.hpp"
#include "phaselab/core/rng.hpp"
#include "phaselab/spectral/io.hpp"

namespace phaselab {
namespace {

using nlohmann::json;

constexpr const char* kManifestFormat = "phaselab-corpus-v1";

std::string pad4(int id) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", id);
  return buf;
}

std::vector<ResampleKind> effective_kernels(const CorpusParams& p,
                                            const std::string& split) {
  if (!p.cross_distribution) return p.train_kernels;
  if (split == "test") return p.held_out_kernels;
  std::vector<ResampleKind> out;
  for (ResampleKind k : p.train_kernels)
    if (std::find(p.held_out_kernels.begin(), p.held_out_kernels.end(), k) ==
        p.held_out_kernels.end())
      out.push_back(k);
  return out;
}

json params_to_json(const CorpusParams& p) {
  json j;
  j["per_class"] = p.per_class;
  j["size"] = p.size;
  j["train_frac"] = p.train_frac;
  j["val_frac"] = p.val_frac;
  j["cross_distribution"] = p.cross_distribution;
  json kernels = json::array();
  for (ResampleKind k : p.train_kernels) kernels.push_back(to_string(k));
  j["train_kernels"] = kernels;
  json held = json::array();
  for (ResampleKind k : p.held_out_kernels) held.push_back(to_string(k));
  j["held_out_kernels"] = held;
  j["chain_lengths"] = p.chain_lengths;
  return j;
}

CorpusParams params_from_json(const json& j) {
  CorpusParams p;
  p.per_class = j.at("per_class").get<int>();
  p.size = j.at("size").get<int>();
  p.train_frac = j.at("train_frac").get<double>();
  p.val_frac = j.at("val_frac").get<double>();
  p.cross_distribution = j.at("cross_distribution").get<bool>();
  p.train_kernels.clear();
  for (const auto& k : j.at("train_kernels"))
    p.train_kernels.push_back(resample_kind_from_string(k.get<std::string>()));
  p.held_out_kernels.clear();
  for (const auto& k : j.at("held_out_kernels"))
    p.held_out_kernels.push_back(resample_kind_from_string(k.get<std::string>()));
  p.chain_lengths = j.at("chain_lengths").get<std::vector<int>>();
  return p;
}

json entry_to_json(const CorpusEntry& e) {
  json j;
  j["id"] = e.id;
  j["path"] = e.path;
  j["label"] = e.label == Label::kForged ? "forged" : "pristine";
  if (e.recipe) {
    j["recipe"] = {{"kernel", e.recipe->kernel}, {"times", e.recipe->times}};
  } else {
    j["recipe"] = nullptr;
  }
  j["split"] = e.split;
  j["seed"] = e.seed;
  j["compression"] = e.compression;
  j["texture"] = e.texture;
  return j;
}

CorpusEntry entry_from_json(const json& j) {
  CorpusEntry e;
  e.id = j.at("id").get<int>();
  e.path = j.at("path").get<std::string>();
  e.label = j.at("label").get<std::string>() == "forged" ? Label::kForged
                                                         : Label::kPristine;
  if (!j.at("recipe").is_null()) {
    RecipeDescriptor r;
    r.kernel = j.at("recipe").at("kernel").get<std::string>();
    r.times = j.at("recipe").at("times").get<int>();
    e.recipe = r;
  }
  e.split = j.at("split").get<std::string>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.compression = j.at("compression").get<std::string>();
  e.texture = j.at("texture").get<std::string>();
  return e;
}

const char* kTextureNames[3] = {"fractal-noise", "gradient-speckle", "mosaic"};
const char* kCompressionNames[3] = {"none", "light", "heavy"};

}  // namespace

std::vector<const CorpusEntry*> CorpusManifest::split_entries(
    const std::string& split) const {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : entries)
    if (e.split == split) out.push_back(&e);
  return out;
}

std::string CorpusManifest::to_json() const {
  json j;
  j["format"] = kManifestFormat;
  j["global_seed"] = global_seed;
  j["params"] = params_to_json(params);
  json arr = json::array();
  for (const auto& e : entries) arr.push_back(entry_to_json(e));
  j["entries"] = arr;
  return j.dump(2) + "\n";
}

CorpusManifest CorpusManifest::from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("format").get<std::string>() != kManifestFormat)
    throw IoError("unrecognized manifest format");
  CorpusManifest m;
  m.global_seed = j.at("global_seed").get<std::uint64_t>();
  m.params = params_from_json(j.at("params"));
  for (const auto& e : j.at("entries")) m.entries.push_back(entry_from_json(e));
  return m;
}

ImageGrid generate_entry_image(const CorpusEntry& entry, const CorpusParams& params) {
  const Rng root(entry.seed);
  TextureSpec ts;
  ts.kind = texture_kind_from_string(entry.texture);
  ts.size = params.size;
  ts.seed = root.fork(1).next_u64();
  ts.alpha = root.fork(2).uniform(0.6, 1.8);

  ForgeryRecipe recipe;
  recipe.compression = compression_from_string(entry.compression);
  if (entry.recipe) {
    recipe.chain =
        down_up_chain(resample_kind_from_string(entry.recipe->kernel), entry.recipe->times);
    Rng mask_rng = root.fork(3);
    const double n = params.size;
    const double cy = mask_rng.uniform(0.30, 0.70) * n;
    const double cx = mask_rng.uniform(0.30, 0.70) * n;
    const double ry = mask_rng.uniform(0.18, 0.38) * n;
    const double rx = mask_rng.uniform(0.18, 0.38) * n;
    const double feather = mask_rng.uniform(0.10, 0.25);
    recipe.mask = elliptical_mask(params.size, params.size, cy, cx, ry, rx, feather);
  } else {
    recipe.mask = RealPlane(params.size, params.size, 0.0);
  }

  auto [image, label] = apply_forgery(gen_texture(ts), recipe);
  if (label != entry.label)
    throw Error("generate_entry_image: label does not match recipe");
  return image;
}

CorpusManifest build_corpus(const CorpusParams& params, std::uint64_t global_seed,
                            const std::filesystem::path& out_dir) {
  if (params.per_class < 2) throw InvalidInput("build_corpus: per_class too small");
  if (params.size % 8 != 0)
    throw InvalidInput("build_corpus: size must be divisible by 8");
  if (params.train_frac <= 0.0 || params.val_frac <= 0.0 ||
      params.train_frac + params.val_frac >= 1.0)
    throw InvalidInput("build_corpus: bad split fractions");
  for (int t : params.chain_lengths)
    if (t < 1) throw InvalidInput("build_corpus: chain lengths must be >= 1");
  if (params.cross_distribution) {
    if (effective_kernels(params, "train").empty() ||
        effective_kernels(params, "test").empty())
      throw InvalidInput("build_corpus: cross mode needs disjoint non-empty kernel sets");
  }

  const int n_train = static_cast<int>(std::lround(params.per_class * params.train_frac));
  const int n_val = static_cast<int>(std::lround(params.per_class * params.val_frac));
  const int n_test = params.per_class - n_train - n_val;
  if (n_test <= 0) throw InvalidInput("build_corpus: empty test split");

  const Rng root(global_seed);
  CorpusManifest manifest;
  manifest.global_seed = global_seed;
  manifest.params = params;

  const struct {
    const char* name;
    int count;
  } splits[] = {{"train", n_train}, {"val", n_val}, {"test", n_test}};

  int id = 0;
  for (const auto& split : splits) {
    const auto kernels = effective_kernels(params, split.name);
    int forged_index = 0;
    for (int label_idx = 0; label_idx < 2; ++label_idx) {
      for (int i = 0; i < split.count; ++i, ++id) {
        CorpusEntry e;
        e.id = id;
        e.split = split.name;
        e.label = label_idx == 0 ? Label::kPristine : Label::kForged;
        e.seed = root.fork(static_cast<std::uint64_t>(id)).seed();
        const Rng meta(e.seed);
        e.texture = kTextureNames[meta.fork(10).uniform_int(0, 2)];
        e.compression = kCompressionNames[meta.fork(11).uniform_int(0, 2)];
        if (e.label == Label::kForged) {
          RecipeDescriptor r;
          const int nk = static_cast<int>(kernels.size());
          const int nt = static_cast<int>(params.chain_lengths.size());
          r.kernel = to_string(kernels[forged_index % nk]);
          r.times = params.chain_lengths[(forged_index / nk) % nt];
          ++forged_index;
          e.recipe = r;
        }
        e.path = std::string(split.name) + "/" +
                 (e.label == Label::kForged ? "forged" : "pristine") + "/" +
                 pad4(id) + ".ppm";
        manifest.entries.push_back(std::move(e));
      }
    }
  }

  std::error_code ec;
  for (const auto& split : splits)
    for (const char* cls : {"pristine", "forged"}) {
      std::filesystem::create_directories(out_dir / split.name / cls, ec);
      if (ec)
        throw IoError("cannot create " + (out_dir / split.name / cls).string() +
                      ": " + ec.message());
    }

  parallel_for(manifest.entries.size(), [&](std::size_t i) {
    const CorpusEntry& e = manifest.entries[i];
    write_image(out_dir / e.path, generate_entry_image(e, params));
  });

  write_text_file(out_dir / "manifest.json", manifest.to_json());
  return manifest;
}

CorpusManifest load_manifest(const std::filesystem::path& corpus_dir) {
  const auto path = corpus_dir / "manifest.json";
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return CorpusManifest::from_json(buf.str());
}

}  // namespace phaselab
