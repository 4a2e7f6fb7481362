#pragma once

#include <cstdint>
#include <string>

namespace capa {

enum class Modality : std::uint8_t { Visual = 0, Text = 1 };

enum class FfnMode : std::uint8_t { Dense = 0, Hadamard = 1, Skip = 2 };

// Which tokens a non-dense FFN mode (and calibration moment collection) applies to.
enum class TokenScope : std::uint8_t { VisualOnly = 0, AllTokens = 1 };

enum class PrunePolicy : std::uint8_t { Contribution = 0, Attention = 1, Uniform = 2 };

// Modality mean used when thresholding layer redundancy.
enum class SelectionBasis : std::uint8_t { Visual = 0, Text = 1, Joint = 2 };

std::string to_string(Modality m);
std::string to_string(FfnMode m);
std::string to_string(TokenScope s);
std::string to_string(PrunePolicy p);
std::string to_string(SelectionBasis b);

Modality parse_modality(const std::string& s);
FfnMode parse_ffn_mode(const std::string& s);
TokenScope parse_scope(const std::string& s);
PrunePolicy parse_policy(const std::string& s);
SelectionBasis parse_basis(const std::string& s);

}  // namespace capa
