#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "capa/tensor.hpp"
#include "capa/types.hpp"

namespace capa {

struct ModelWeights;
struct TokenStream;
struct LayerExecPlan;
struct LayerSelection;

// Per-dimension second-order moments of (x, y) pairs captured at the FFN
// residual boundary. Accumulated in double: sum of x*x over many samples
// loses precision in float32.
struct CalibMoments {
  std::size_t layer = 0;
  std::vector<double> sum_xy;
  std::vector<double> sum_xx;
  std::size_t n_samples = 0;

  explicit CalibMoments(std::size_t layer_index = 0, std::size_t dim = 0)
      : layer(layer_index), sum_xy(dim, 0.0), sum_xx(dim, 0.0) {}

  void merge(const CalibMoments& other);
};

// Elementwise scaling vector replacing a residual FFN block: y ~= x (*) alpha.
struct AlphaVector {
  std::size_t layer = 0;
  std::vector<float> alpha;
  // Set where the denominator guard fired and alpha fell back to identity.
  std::vector<std::uint8_t> fallback_mask;
};

void accumulate(CalibMoments& moments, std::span<const float> x, std::span<const float> y);

// Closed-form per-dimension least squares: alpha_k = sum_xy_k / sum_xx_k,
// with identity fallback where sum_xx_k <= epsilon.
AlphaVector solve_alpha(const CalibMoments& moments, double epsilon = 1e-8);

// y = x (*) alpha; counter, when given, grows by exactly x.size().
std::vector<float> apply_hadamard(std::span<const float> x, std::span<const float> alpha,
                                  OpCounter* counter = nullptr);

// Probes the model over the calibration set and solves one AlphaVector per
// selected layer. The probe pass runs fully dense unless probe_plan is given
// (used by recovery tests that plant a known block). Scope restricts which
// tokens feed the moments.
std::vector<AlphaVector> calibrate_layers(const ModelWeights& weights,
                                          const LayerSelection& selection,
                                          const std::vector<TokenStream>& calib, TokenScope scope,
                                          const LayerExecPlan* probe_plan = nullptr,
                                          std::size_t n_threads = 1);

// Mean squared reconstruction error of hadamard (x (*) alpha) vs skip (x)
// against the dense residual output, over the calibration probes.
struct FfnApproxError {
  std::size_t layer = 0;
  double hadamard_mse = 0.0;
  double skip_mse = 0.0;
  std::size_t n_samples = 0;
};

std::vector<FfnApproxError> approximation_errors(const ModelWeights& weights,
                                                 std::span<const std::size_t> layers,
                                                 std::span<const AlphaVector> alphas,
                                                 const std::vector<TokenStream>& calib,
                                                 TokenScope scope);

}  // namespace capa
