#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace phaselab {

// Dense row-major array. Shapes are small (<= 4 dims), all arithmetic is
// 64-bit so finite-difference gradient checks stay tight.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)), v(numel(shape), 0.0) {}

  static std::size_t numel(const std::vector<int>& s) {
    if (s.empty()) return 0;
    std::size_t n = 1;
    for (int d : s) n *= static_cast<std::size_t>(d);
    return n;
  }

  std::size_t size() const { return v.size(); }
  bool empty() const { return v.empty(); }

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

}  // namespace phaselab
