#pragma once

#include <cstdint>
#include <mutex>
#include <random>

#include "rpca/bits.hpp"

namespace rpca {

/// Source of the random initial data (rid) that seeds each block's CAF run.
/// Implementations must be safe to call from several threads.
class RidSource {
 public:
  virtual ~RidSource() = default;
  virtual Block draw() = 0;
};

/// OS entropy via std::random_device.
class SystemRidSource final : public RidSource {
 public:
  Block draw() override;

 private:
  std::mutex mutex_;
  std::random_device device_;
};

/// Deterministic stream for reproducible vectors and tests. Not for real use.
class SeededRidSource final : public RidSource {
 public:
  explicit SeededRidSource(std::uint64_t seed) : engine_(seed) {}
  Block draw() override;

 private:
  std::mutex mutex_;
  std::mt19937_64 engine_;
};

// Fills `out` from std::random_device.
void fill_system_random(std::span<std::uint8_t> out);

}  // namespace rpca
