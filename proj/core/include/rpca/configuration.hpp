#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rpca {

/// A fixed-length row of binary cells. Cell 0 is the leftmost cell.
///
/// Byte conversions are MSB-first: cell 0 is the most significant bit of
/// byte 0. Integer conversions treat cell 0 as the most significant bit of
/// the index, so "1000" on four cells is index 8.
class Configuration {
 public:
  explicit Configuration(std::size_t cells);

  static Configuration from_string(std::string_view bits);
  static Configuration from_bytes(std::span<const std::uint8_t> bytes, std::size_t cells);
  static Configuration from_index(std::uint64_t index, std::size_t cells);

  std::size_t size() const noexcept { return cells_; }

  bool get(std::size_t cell) const noexcept {
    return (words_[cell >> 6] >> (cell & 63)) & 1u;
  }
  bool operator[](std::size_t cell) const noexcept { return get(cell); }

  void set(std::size_t cell, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (cell & 63);
    if (value) {
      words_[cell >> 6] |= mask;
    } else {
      words_[cell >> 6] &= ~mask;
    }
  }

  void flip(std::size_t cell) noexcept { words_[cell >> 6] ^= std::uint64_t{1} << (cell & 63); }

  std::size_t popcount() const noexcept;

  // Requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;
  std::vector<std::uint8_t> to_bytes() const;

  Configuration operator^(const Configuration& other) const;
  Configuration operator~() const;

  bool operator==(const Configuration&) const = default;

 private:
  void clear_padding() noexcept;

  std::size_t cells_;
  std::vector<std::uint64_t> words_;
};

}  // namespace rpca
