#include "rpca/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rpca/random.hpp"

namespace rpca {

FlipTarget parse_flip_target(std::string_view text) {
  if (text == "plaintext") return FlipTarget::plaintext;
  if (text == "key") return FlipTarget::key;
  if (text == "none") return FlipTarget::none;
  throw std::invalid_argument("flip target must be plaintext, key or none, got '" + std::string(text) + "'");
}

std::string_view to_string(FlipTarget target) noexcept {
  switch (target) {
    case FlipTarget::plaintext:
      return "plaintext";
    case FlipTarget::key:
      return "key";
    case FlipTarget::none:
      return "none";
  }
  return "unknown";
}

AvalancheReport avalanche(const SecretKey& key, const CipherParams& params, std::size_t trials, FlipTarget target,
                          std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("avalanche needs at least one trial");
  }
  std::mt19937_64 rng(seed);
  auto random_block = [&] {
    Block b;
    for (auto& byte : b) byte = static_cast<std::uint8_t>(rng());
    return b;
  };

  const BlockCipher base(key, params);
  std::array<std::size_t, kBlockBits> flips{};
  std::size_t total = 0;

  for (std::size_t t = 0; t < trials; ++t) {
    const Block plaintext = random_block();
    const Block rid = random_block();
    const CipherRecord reference = base.encrypt(plaintext, rid);

    CipherRecord mutated;
    switch (target) {
      case FlipTarget::plaintext: {
        Block p = plaintext;
        flip_bit(p, rng() % kBlockBits);
        mutated = base.encrypt(p, rid);
        break;
      }
      case FlipTarget::key: {
        SecretKey::Raw raw = key.raw();
        flip_bit(raw, rng() % (kKeyBytes * 8));
        mutated = BlockCipher(SecretKey(raw), params).encrypt(plaintext, rid);
        break;
      }
      case FlipTarget::none:
        mutated = base.encrypt(plaintext, rid);
        break;
    }

    for (std::size_t bit = 0; bit < kBlockBits; ++bit) {
      if (bit_at(reference.ciphertext, bit) != bit_at(mutated.ciphertext, bit)) {
        ++flips[bit];
        ++total;
      }
    }
  }

  AvalancheReport report;
  report.trials = trials;
  report.target = target;
  for (std::size_t bit = 0; bit < kBlockBits; ++bit) {
    report.per_bit[bit] = static_cast<double>(flips[bit]) / static_cast<double>(trials);
  }
  report.mean_flip_fraction = static_cast<double>(total) / static_cast<double>(trials * kBlockBits);
  return report;
}

ThroughputReport throughput_bench(const SecretKey& key, const CipherParams& params, std::size_t megabytes,
                                  std::size_t workers) {
  if (megabytes == 0) {
    throw std::invalid_argument("benchmark needs at least 1 MB");
  }
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }

  ThroughputReport report;
  report.bytes = megabytes * (std::size_t{1} << 20);
  report.workers = workers;

  std::vector<std::uint8_t> message(report.bytes);
  std::mt19937_64 rng(7);
  for (auto& b : message) b = static_cast<std::uint8_t>(rng());

  const double mb = static_cast<double>(report.bytes) / static_cast<double>(1 << 20);
  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  bool ok = true;
  auto run = [&](std::size_t w, double& enc_rate, double& dec_rate) {
    SeededRidSource rids(11);
    std::vector<CipherRecord> records;
    std::vector<std::uint8_t> recovered;
    const double enc = timed([&] { records = encrypt_stream(message, key, params, rids, w); });
    const double dec = timed([&] { recovered = decrypt_stream(records, key, params, w); });
    enc_rate = mb / enc;
    dec_rate = mb / dec;
    ok = ok && recovered == message;
  };

  run(1, report.encrypt_mbps_single, report.decrypt_mbps_single);
  run(workers, report.encrypt_mbps_multi, report.decrypt_mbps_multi);
  report.round_trip_ok = ok;
  return report;
}

std::optional<bool> parallel_scaling_ok(const ThroughputReport& report, unsigned hardware_threads) {
  if (hardware_threads < 4 || report.workers < 2) {
    return std::nullopt;
  }
  return report.encrypt_mbps_multi >= 1.2 * report.encrypt_mbps_single;
}

std::string format_report(const AvalancheReport& report, bool key_value) {
  std::ostringstream out;
  if (key_value) {
    out << "trials=" << report.trials << '\n'
        << "flip=" << to_string(report.target) << '\n'
        << "mean_flip_fraction=" << report.mean_flip_fraction << '\n';
    double lo = 1.0;
    double hi = 0.0;
    for (double f : report.per_bit) {
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    out << "min_bit_fraction=" << lo << '\n' << "max_bit_fraction=" << hi << '\n';
    return out.str();
  }
  out << "avalanche: " << report.trials << " trials, flipping " << to_string(report.target) << '\n'
      << "mean flip fraction: " << report.mean_flip_fraction << '\n'
      << "per-bit flip frequency (16 rows x 8 bits):\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (std::size_t row = 0; row < kBlockBytes; ++row) {
    for (std::size_t b = 0; b < 8; ++b) {
      out << (b == 0 ? "  " : " ") << report.per_bit[row * 8 + b];
    }
    out << '\n';
  }
  return out.str();
}

std::string format_report(const ThroughputReport& report, bool key_value) {
  std::ostringstream out;
  if (key_value) {
    out << "bytes=" << report.bytes << '\n'
        << "workers=" << report.workers << '\n'
        << "encrypt_mbps_single=" << report.encrypt_mbps_single << '\n'
        << "decrypt_mbps_single=" << report.decrypt_mbps_single << '\n'
        << "encrypt_mbps_multi=" << report.encrypt_mbps_multi << '\n'
        << "decrypt_mbps_multi=" << report.decrypt_mbps_multi << '\n'
        << "round_trip_ok=" << (report.round_trip_ok ? 1 : 0) << '\n';
    return out.str();
  }
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "throughput over " << report.bytes / (1 << 20) << " MiB\n"
      << "  1 worker : encrypt " << report.encrypt_mbps_single << " MB/s, decrypt " << report.decrypt_mbps_single
      << " MB/s\n"
      << "  " << report.workers << " workers: encrypt " << report.encrypt_mbps_multi << " MB/s, decrypt "
      << report.decrypt_mbps_multi << " MB/s\n"
      << "  round trip: " << (report.round_trip_ok ? "ok" : "FAILED") << '\n';
  return out.str();
}

}  // namespace rpca
