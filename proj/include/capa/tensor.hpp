#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace capa {

// Multiply-accumulate counter. One mul-add is priced at 2 FLOPs everywhere.
struct OpCounter {
  std::uint64_t mul_adds = 0;

  void add(std::uint64_t n) { mul_adds += n; }
  void reset() { mul_adds = 0; }
};

// Dense row-major float32 matrix. Reductions inside kernels accumulate in
// double so results do not depend on how the optimizer vectorizes a loop.
class Tensor2D {
 public:
  Tensor2D() = default;
  Tensor2D(std::size_t rows, std::size_t cols, float fill = 0.0f)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  float& at(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  float at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<float> row(std::size_t r) {
    assert(r < rows_);
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const float> row(std::size_t r) const {
    assert(r < rows_);
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<float>& data() { return data_; }
  const std::vector<float>& data() const { return data_; }

  bool all_finite() const;

  // Keeps only the listed rows, in the given order.
  Tensor2D select_rows(std::span<const std::size_t> rows) const;

  Tensor2D transposed() const;

  bool operator==(const Tensor2D& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> data_;
};

inline constexpr double kCosineEps = 1e-12;

// a[m x k] * b[k x n]; counter, when given, grows by exactly m*k*n.
Tensor2D matmul(const Tensor2D& a, const Tensor2D& b, OpCounter* counter = nullptr);

// Max-subtracted softmax; throws ConfigError on empty or non-finite input.
std::vector<float> softmax(std::span<const float> logits);

double l2_norm(std::span<const float> v);

double dot(std::span<const float> x, std::span<const float> y);

// nullopt when either vector has norm below kCosineEps: the similarity of a
// (near-)zero vector is undefined and must not silently poison averages.
std::optional<double> cosine_sim(std::span<const float> x, std::span<const float> y);

// v / sqrt(mean(v^2) + eps) * scale, elementwise.
std::vector<float> rms_normalize(std::span<const float> v, std::span<const float> scale,
                                 float eps = 1e-6f);

float silu(float x);

}  // namespace capa
