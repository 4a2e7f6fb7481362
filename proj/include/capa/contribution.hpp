#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "capa/tensor.hpp"
#include "capa/types.hpp"

namespace capa {

struct KvCache;

struct ContributionRecord {
  std::size_t token_index = 0;          // original stream position
  double c_value = 0.0;                 // attention contribution score
  std::vector<float> per_head_attn;     // probability assigned by each head
  std::size_t layer = 0;
};

// Surviving original token indices, sorted ascending. Rows not listed are
// dropped when the set is applied to a cache or hidden-state matrix.
struct KeepSet {
  std::vector<std::size_t> indices;
  double keep_ratio = 1.0;

  bool contains(std::size_t index) const;
};

// clamp(round(keep_ratio * n_visual), 1, n_visual); throws on ratio outside (0, 1].
std::size_t keep_count(std::size_t n_visual, double keep_ratio);

// L2 norm of the head-summed, output-projected value contribution of one
// token: || sum_h a_h (x W_{V,h}) W_{O,h} ||. wv and wo are the full d x d
// projections; the per-head slices are d_head-wide column (wv) and row (wo)
// blocks.
double attention_contribution(std::span<const float> per_head_attn, std::span<const float> x,
                              const Tensor2D& wv, const Tensor2D& wo, std::size_t n_heads);

// Same score computed from an already-projected value row (a KV-cache row),
// i.e. value = x * W_V.
double contribution_from_values(std::span<const float> per_head_attn,
                                std::span<const float> value_row, const Tensor2D& wo,
                                std::size_t n_heads);

// Scores every cached token of one layer against the probe query's per-head
// attention rows (attn_rows is H x n). positions maps rows to original token
// indices.
std::vector<ContributionRecord> score_contributions(const Tensor2D& values,
                                                    const Tensor2D& attn_rows, const Tensor2D& wo,
                                                    std::span<const std::size_t> positions,
                                                    std::size_t layer);

// Top-k over visual tokens by contribution; ties broken by smaller token
// index; text tokens always kept. modality is indexed by token_index.
KeepSet rank_by_contribution(const std::vector<ContributionRecord>& records,
                             std::span<const Modality> modality, double keep_ratio);

// Baseline: score = head-mean attention probability (attn_rows is H x n,
// column i belongs to token i).
KeepSet rank_by_attention(const Tensor2D& attn_rows, std::span<const Modality> modality,
                          double keep_ratio);

// Baseline: fixed-stride sampling over an all-visual universe of n tokens;
// index j of k kept is floor(j * n / k), so index 0 is always kept.
KeepSet uniform_stride(std::size_t n_visual, double keep_ratio);

// uniform_stride over the visual ordinals of a mixed stream, text completed.
KeepSet uniform_keep(std::span<const Modality> modality, double keep_ratio);

// Removes evicted rows in every layer with index >= from_layer; earlier
// layers are untouched. Keep indices must name rows present in each pruned
// layer.
KvCache prune_cache(KvCache cache, const KeepSet& keep, std::size_t from_layer);

}  // namespace capa
