#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rpca/bits.hpp"
#include "rpca/block_cipher.hpp"

namespace rpca {

enum class FlipTarget { plaintext, key, none };

FlipTarget parse_flip_target(std::string_view text);
std::string_view to_string(FlipTarget target) noexcept;

struct AvalancheReport {
  std::size_t trials = 0;
  FlipTarget target = FlipTarget::plaintext;
  double mean_flip_fraction = 0.0;
  std::array<double, kBlockBits> per_bit{};  // per ciphertext bit
};

// Each trial draws a random plaintext and rid, flips one uniformly chosen
// plaintext or key bit (none: flips nothing), re-encrypts with the same rid
// and counts differing ciphertext bits. Deterministic for a given seed.
AvalancheReport avalanche(const SecretKey& key, const CipherParams& params, std::size_t trials, FlipTarget target,
                          std::uint64_t seed = 1);

struct ThroughputReport {
  std::size_t bytes = 0;
  std::size_t workers = 1;
  double encrypt_mbps_single = 0.0;
  double decrypt_mbps_single = 0.0;
  double encrypt_mbps_multi = 0.0;
  double decrypt_mbps_multi = 0.0;
  bool round_trip_ok = false;
};

// Times stream encryption/decryption of `megabytes` MiB with one worker and
// with `workers` workers (0 = hardware concurrency), verifying a round trip.
ThroughputReport throughput_bench(const SecretKey& key, const CipherParams& params, std::size_t megabytes,
                                  std::size_t workers = 0);

// Multi-worker encryption at least 1.2x single-worker. nullopt when fewer than
// four hardware threads are available.
std::optional<bool> parallel_scaling_ok(const ThroughputReport& report, unsigned hardware_threads);

std::string format_report(const AvalancheReport& report, bool key_value = false);
std::string format_report(const ThroughputReport& report, bool key_value = false);

}  // namespace rpca
