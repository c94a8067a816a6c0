#include "rpca/bits.hpp"

#include <bit>
#include <stdexcept>

namespace rpca {

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming distance needs equal-length inputs");
  }
  std::size_t bits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bits += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(a[i] ^ b[i])));
  }
  return bits;
}

Block xor_blocks(const Block& a, const Block& b) noexcept {
  Block out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
  }
  return out;
}

Configuration to_configuration(std::span<const std::uint8_t> bytes) {
  return Configuration::from_bytes(bytes, bytes.size() * 8);
}

Block to_block(const Configuration& config) {
  if (config.size() != kBlockBits) {
    throw std::invalid_argument("block conversion needs exactly 128 cells");
  }
  const auto bytes = config.to_bytes();
  Block out{};
  std::copy_n(bytes.begin(), out.size(), out.begin());
  return out;
}

Segment64 to_segment(const Configuration& config) {
  if (config.size() != 64) {
    throw std::invalid_argument("segment conversion needs exactly 64 cells");
  }
  const auto bytes = config.to_bytes();
  Segment64 out{};
  std::copy_n(bytes.begin(), out.size(), out.begin());
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0F]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw std::invalid_argument("invalid hex character '" + std::string(1, c) + "'");
  };
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("hex string has odd length");
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace rpca
