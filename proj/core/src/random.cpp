#include "rpca/random.hpp"

namespace rpca {

void fill_system_random(std::span<std::uint8_t> out) {
  std::random_device device;
  for (std::size_t i = 0; i < out.size(); i += 4) {
    const auto word = device();
    for (std::size_t k = 0; k < 4 && i + k < out.size(); ++k) {
      out[i + k] = static_cast<std::uint8_t>(word >> (8 * k));
    }
  }
}

Block SystemRidSource::draw() {
  Block out;
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < out.size(); i += 4) {
    const auto word = device_();
    for (std::size_t k = 0; k < 4; ++k) {
      out[i + k] = static_cast<std::uint8_t>(word >> (8 * k));
    }
  }
  return out;
}

Block SeededRidSource::draw() {
  Block out;
  std::lock_guard lock(mutex_);
  for (std::size_t half = 0; half < 2; ++half) {
    const auto word = engine_();
    for (std::size_t k = 0; k < 8; ++k) {
      out[half * 8 + k] = static_cast<std::uint8_t>(word >> (56 - 8 * k));
    }
  }
  return out;
}

}  // namespace rpca
