#include "rpca/configuration.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rpca {

Configuration::Configuration(std::size_t cells) : cells_(cells), words_((cells + 63) / 64, 0) {
  if (cells == 0) {
    throw std::invalid_argument("configuration needs at least one cell");
  }
}

Configuration Configuration::from_string(std::string_view bits) {
  Configuration config(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      config.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("configuration string may only contain '0' and '1': " + std::string(bits));
    }
  }
  return config;
}

Configuration Configuration::from_bytes(std::span<const std::uint8_t> bytes, std::size_t cells) {
  if (bytes.size() * 8 < cells) {
    throw std::invalid_argument("not enough bytes for " + std::to_string(cells) + " cells");
  }
  Configuration config(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    config.set(i, (bytes[i >> 3] >> (7 - (i & 7))) & 1u);
  }
  return config;
}

Configuration Configuration::from_index(std::uint64_t index, std::size_t cells) {
  if (cells > 64) {
    throw std::invalid_argument("index conversion supports at most 64 cells");
  }
  Configuration config(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    config.set(i, (index >> (cells - 1 - i)) & 1u);
  }
  return config;
}

std::size_t Configuration::popcount() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::uint64_t Configuration::to_index() const {
  if (cells_ > 64) {
    throw std::invalid_argument("index conversion supports at most 64 cells");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < cells_; ++i) {
    index = (index << 1) | static_cast<std::uint64_t>(get(i));
  }
  return index;
}

std::string Configuration::to_string() const {
  std::string out(cells_, '0');
  for (std::size_t i = 0; i < cells_; ++i) {
    if (get(i)) {
      out[i] = '1';
    }
  }
  return out;
}

std::vector<std::uint8_t> Configuration::to_bytes() const {
  std::vector<std::uint8_t> out((cells_ + 7) / 8, 0);
  for (std::size_t i = 0; i < cells_; ++i) {
    if (get(i)) {
      out[i >> 3] = static_cast<std::uint8_t>(out[i >> 3] | (0x80u >> (i & 7)));
    }
  }
  return out;
}

Configuration Configuration::operator^(const Configuration& other) const {
  if (other.cells_ != cells_) {
    throw std::invalid_argument("configuration length mismatch");
  }
  Configuration out(*this);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] ^= other.words_[w];
  }
  return out;
}

Configuration Configuration::operator~() const {
  Configuration out(*this);
  for (auto& w : out.words_) {
    w = ~w;
  }
  out.clear_padding();
  return out;
}

void Configuration::clear_padding() noexcept {
  if (const auto tail = cells_ & 63; tail != 0) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

}  // namespace rpca
