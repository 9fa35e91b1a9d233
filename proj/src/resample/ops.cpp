#include "phaselab/resample/ops.hpp"

#include <algorithm>
#include <cmath>

#include "phaselab/core/error.hpp"

namespace phaselab {

std::string to_string(ResampleKind kind) {
  switch (kind) {
    case ResampleKind::kZeroInsert: return "zero-insert";
    case ResampleKind::kNearest: return "nearest";
    case ResampleKind::kBilinear: return "bilinear";
    case ResampleKind::kBicubic: return "bicubic";
    case ResampleKind::kDecimate: return "decimate";
  }
  return "?";
}

ResampleKind resample_kind_from_string(const std::string& name) {
  if (name == "zero-insert") return ResampleKind::kZeroInsert;
  if (name == "nearest") return ResampleKind::kNearest;
  if (name == "bilinear") return ResampleKind::kBilinear;
  if (name == "bicubic") return ResampleKind::kBicubic;
  if (name == "decimate") return ResampleKind::kDecimate;
  throw InvalidInput("unknown resample kind: " + name);
}

Signal upsample_zero_insert(const Signal& signal, int factor) {
  if (signal.empty()) throw InvalidInput("upsample_zero_insert: empty signal");
  if (factor < 2) throw InvalidInput("upsample_zero_insert: factor must be >= 2");
  Signal out(signal.size() * static_cast<std::size_t>(factor), 0.0);
  for (std::size_t i = 0; i < signal.size(); ++i)
    out[i * static_cast<std::size_t>(factor)] = signal[i];
  return out;
}

double verify_duplication(const Signal& signal) {
  const Spectrum base = dft1(signal);
  const Spectrum up = dft1(upsample_zero_insert(signal, 2));
  const std::size_t n = base.size();
  double worst = 0.0;
  for (std::size_t u = 0; u < up.size(); ++u)
    worst = std::max(worst, std::abs(up[u] - 0.5 * base[u % n]));
  return worst;
}

namespace {

double cubic_weight(double t) {
  // Catmull-Rom (a = -0.5)
  constexpr double a = -0.5;
  t = std::fabs(t);
  if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
  if (t < 2.0) return (((t - 5.0) * t + 8.0) * t - 4.0) * a;
  return 0.0;
}

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

// Interpolating up-sample of the rows by an integer factor; output row j
// samples input coordinate (j + 0.5)/f - 0.5.
RealPlane upsample_rows(const RealPlane& in, ResampleKind kind, int factor) {
  const int h = in.height, w = in.width;
  const int oh = h * factor;
  RealPlane out(oh, w);
  for (int j = 0; j < oh; ++j) {
    const double c = (j + 0.5) / factor - 0.5;
    switch (kind) {
      case ResampleKind::kZeroInsert: {
        if (j % factor == 0)
          for (int x = 0; x < w; ++x) out.at(j, x) = in.at(j / factor, x);
        break;
      }
      case ResampleKind::kNearest: {
        const int src = clamp_index(static_cast<int>(std::floor(c + 0.5)), h);
        for (int x = 0; x < w; ++x) out.at(j, x) = in.at(src, x);
        break;
      }
      case ResampleKind::kBilinear: {
        const int i0 = static_cast<int>(std::floor(c));
        const double t = c - i0;
        const int a = clamp_index(i0, h), b = clamp_index(i0 + 1, h);
        for (int x = 0; x < w; ++x)
          out.at(j, x) = (1.0 - t) * in.at(a, x) + t * in.at(b, x);
        break;
      }
      case ResampleKind::kBicubic: {
        const int i0 = static_cast<int>(std::floor(c));
        for (int k = -1; k <= 2; ++k) {
          const double wgt = cubic_weight(c - (i0 + k));
          if (wgt == 0.0) continue;
          const int src = clamp_index(i0 + k, h);
          for (int x = 0; x < w; ++x) out.at(j, x) += wgt * in.at(src, x);
        }
        break;
      }
      case ResampleKind::kDecimate:
        throw InvalidInput("upsample_rows: decimate is not an up-sampling kind");
    }
  }
  return out;
}

RealPlane transpose(const RealPlane& in) {
  RealPlane out(in.width, in.height);
  for (int y = 0; y < in.height; ++y)
    for (int x = 0; x < in.width; ++x) out.at(x, y) = in.at(y, x);
  return out;
}

}  // namespace

RealPlane apply_resample(const RealPlane& plane, const ResampleOp& op) {
  if (op.kind == ResampleKind::kDecimate) {
    if (op.factor < 2) throw InvalidInput("decimate: stride must be >= 2");
    const int oh = (plane.height + op.factor - 1) / op.factor;
    const int ow = (plane.width + op.factor - 1) / op.factor;
    RealPlane out(oh, ow);
    for (int y = 0; y < oh; ++y)
      for (int x = 0; x < ow; ++x) out.at(y, x) = plane.at(y * op.factor, x * op.factor);
    return out;
  }
  if (op.factor < 2) throw InvalidInput("up-sampling factor must be >= 2");
  RealPlane rows = upsample_rows(plane, op.kind, op.factor);
  return transpose(upsample_rows(transpose(rows), op.kind, op.factor));
}

ImageGrid apply_resample(const ImageGrid& image, const ResampleOp& op) {
  std::vector<double> data;
  int oh = 0, ow = 0;
  for (int c = 0; c < image.channels(); ++c) {
    RealPlane out = apply_resample(image.plane(c), op);
    oh = out.height;
    ow = out.width;
    data.insert(data.end(), out.v.begin(), out.v.end());
  }
  return ImageGrid::from_data_clamped(oh, ow, image.channels(), std::move(data));
}

ImageGrid apply_chain(const ImageGrid& image, const ResampleChain& chain) {
  ImageGrid cur = image;
  for (const ResampleOp& op : chain.ops) cur = apply_resample(cur, op);
  return cur;
}

}  // namespace phaselab
