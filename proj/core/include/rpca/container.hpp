#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rpca/block_cipher.hpp"

namespace rpca {

// On-disk layout (all multi-byte fields big-endian):
//
//   offset  size  field
//        0     4  magic "RPC1"
//        4     1  version (1)
//        5     1  rounds (1..64)
//        6     2  caf_steps (2..1024)
//        8     8  plaintext_length (bytes before padding)
//       16     2  reserved, zero
//       18  32*k  records: ciphertext (16) || encrypted final data (16)
//
// k = plaintext_length / 16 + 1, since padding always adds at least one byte.
struct ContainerHeader {
  static constexpr std::size_t kSize = 18;
  static constexpr std::uint8_t kVersion = 1;

  CipherParams params{};
  std::uint64_t plaintext_length = 0;

  std::size_t record_count() const noexcept { return static_cast<std::size_t>(plaintext_length / kBlockBytes + 1); }
  bool operator==(const ContainerHeader&) const = default;
};

struct Container {
  ContainerHeader header;
  std::vector<CipherRecord> records;
};

// Throws ValidationError if the header is out of range or the record count
// does not match plaintext_length.
std::vector<std::uint8_t> write_container(const ContainerHeader& header, std::span<const CipherRecord> records);
// Throws UnsupportedFormatError, LengthError or ValidationError.
Container read_container(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Key files hold either 32 raw bytes or 64 hex characters (surrounding
// whitespace ignored). Throws KeyFormatError.
SecretKey parse_key_file_contents(std::span<const std::uint8_t> contents);
SecretKey read_key_file(const std::filesystem::path& path);
// Raw 32 bytes, owner read/write only where supported.
void write_key_file(const std::filesystem::path& path, const SecretKey& key);

}  // namespace rpca
