#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpca/configuration.hpp"

namespace rpca {

inline constexpr std::size_t kBlockBytes = 16;
inline constexpr std::size_t kBlockBits = kBlockBytes * 8;

using Block = std::array<std::uint8_t, kBlockBytes>;
using Segment64 = std::array<std::uint8_t, 8>;

// Bit i of a byte string is the (7 - i % 8)th bit of byte i / 8, so bit 0 is
// the most significant bit of byte 0 and maps onto the leftmost cell.
constexpr bool bit_at(std::span<const std::uint8_t> bytes, std::size_t i) noexcept {
  return (bytes[i >> 3] >> (7 - (i & 7))) & 1u;
}

constexpr void flip_bit(std::span<std::uint8_t> bytes, std::size_t i) noexcept {
  bytes[i >> 3] = static_cast<std::uint8_t>(bytes[i >> 3] ^ (0x80u >> (i & 7)));
}

constexpr void set_bit(std::span<std::uint8_t> bytes, std::size_t i, bool value) noexcept {
  const auto mask = static_cast<std::uint8_t>(0x80u >> (i & 7));
  bytes[i >> 3] = static_cast<std::uint8_t>(value ? (bytes[i >> 3] | mask) : (bytes[i >> 3] & ~mask));
}

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

Block xor_blocks(const Block& a, const Block& b) noexcept;

Configuration to_configuration(std::span<const std::uint8_t> bytes);
Block to_block(const Configuration& config);
Segment64 to_segment(const Configuration& config);

std::string to_hex(std::span<const std::uint8_t> bytes);
// Accepts upper or lower case; throws std::invalid_argument on odd length or non-hex.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace rpca
