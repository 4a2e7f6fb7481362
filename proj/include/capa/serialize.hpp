#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace capa {

// Shared binary tensor container. Layout, all little-endian:
//   magic "CAPT", format version u16, tensor count u32, then per tensor:
//   name length u16 + UTF-8 name, rank u8, dims as u32s, payload as f32.
inline constexpr std::uint16_t kTensorFormatVersion = 1;

struct NamedTensor {
  std::string name;
  std::vector<std::uint32_t> dims;
  std::vector<float> values;

  bool operator==(const NamedTensor& other) const = default;
};

std::string encode_tensors(std::span<const NamedTensor> tensors);
std::vector<NamedTensor> decode_tensors(const std::string& bytes);

void write_tensor_file(const std::string& path, std::span<const NamedTensor> tensors);
std::vector<NamedTensor> read_tensor_file(const std::string& path);

// "key = value" per line; '#' starts a comment. Write order is the pair order.
using KvPairs = std::vector<std::pair<std::string, std::string>>;

std::string encode_kv(const KvPairs& pairs);
KvPairs decode_kv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace capa
