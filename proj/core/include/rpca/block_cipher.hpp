#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rpca/bits.hpp"
#include "rpca/random.hpp"
#include "rpca/rule.hpp"
#include "rpca/second_order.hpp"

namespace rpca {

inline constexpr std::size_t kKeyBytes = 32;

/// 256-bit key: CAL rule (bits 0-63), CAR rule (bits 64-127), CAF rule
/// (bits 128-255). The CAF segment doubles as the final-data mask.
class SecretKey {
 public:
  using Raw = std::array<std::uint8_t, kKeyBytes>;

  explicit SecretKey(const Raw& raw) noexcept : raw_(raw) {}

  const Raw& raw() const noexcept { return raw_; }
  Segment64 cal_segment() const noexcept;
  Segment64 car_segment() const noexcept;
  Block caf_segment() const noexcept;

  bool operator==(const SecretKey&) const = default;

 private:
  Raw raw_;
};

// Throws KeyFormatError unless raw is exactly 32 bytes.
SecretKey parse_key(std::span<const std::uint8_t> raw);
// 64 hex characters.
SecretKey parse_key_hex(std::string_view hex);

struct CipherParams {
  static constexpr unsigned kMinRounds = 1;
  static constexpr unsigned kMaxRounds = 64;
  static constexpr unsigned kMinCafSteps = 2;
  static constexpr unsigned kMaxCafSteps = 1024;

  unsigned rounds = 10;
  unsigned caf_steps = 32;

  // Throws std::out_of_range.
  void validate() const;
  bool operator==(const CipherParams&) const = default;
};

/// Round inputs built from the four newest CAL/CAR configurations.
struct RoundMaterial {
  Block sub;  // L_n || R_n
  Block row;  // L_{n-1} || R_{n-1}
  Block mix;  // L_{n-2} || R_{n-2}
  Block key;  // L_{n-3} || R_{n-3}

  bool operator==(const RoundMaterial&) const = default;
};

enum class Direction { forward, inverse };

// 128-entry radius-3 table: entries 0-63 and 64-127 both hold the segment.
RuleTable expand_rule_segment(const Segment64& segment);
// The CAF segment used directly as a 128-entry radius-3 table.
RuleTable caf_rule(const SecretKey& key);
// Eight bytes of (round_index + 1) mod 256.
Segment64 round_constant(std::size_t round_index);

RoundMaterial derive_round_material(const SecretKey& key, std::size_t round_index);

Block byte_substitution(const Block& state, const Block& material, Direction direction);
Block row_shift(const Block& state, const Block& material, Direction direction);
Block column_mix(const Block& state, const Block& material, Direction direction);
Block add_round_key(const Block& state, const Block& material) noexcept;

Block round_forward(const Block& state, const RoundMaterial& material);
Block round_inverse(const Block& state, const RoundMaterial& material);
Block round_forward(const Block& state, const SecretKey& key, std::size_t round_index);
Block round_inverse(const Block& state, const SecretKey& key, std::size_t round_index);

struct CafOutput {
  Block ciphertext;  // q_{T-1}
  Block final_data;  // q_T
};

struct CafRecovery {
  Block state;
  Block rid;
};

CafOutput caf_core_encrypt(const Block& state, const Block& rid, const SecretKey& key, std::size_t steps);
CafRecovery caf_core_recover(const Block& ciphertext, const Block& final_data, const SecretKey& key,
                             std::size_t steps);
Block caf_core_decrypt(const Block& ciphertext, const Block& final_data, const SecretKey& key, std::size_t steps);

// XOR with the CAF key segment; an involution.
Block mask_final_data(const Block& final_data, const SecretKey& key) noexcept;

struct CipherRecord {
  static constexpr std::size_t kWireBytes = 2 * kBlockBytes;

  Block ciphertext{};
  Block encrypted_final_data{};
  CipherParams params{};

  // ciphertext then encrypted final data.
  std::array<std::uint8_t, kWireBytes> to_wire() const noexcept;
  static CipherRecord from_wire(std::span<const std::uint8_t> bytes, const CipherParams& params);

  bool operator==(const CipherRecord&) const = default;
};

/// Key plus parameters with the per-round material and CAF rule expanded once.
class BlockCipher {
 public:
  BlockCipher(const SecretKey& key, const CipherParams& params);

  CipherRecord encrypt(const Block& plaintext, const Block& rid) const;
  // Throws ParameterMismatchError when record.params differs from params().
  Block decrypt(const CipherRecord& record) const;

  const SecretKey& key() const noexcept { return key_; }
  const CipherParams& params() const noexcept { return params_; }
  const RoundMaterial& material(std::size_t round_index) const { return materials_.at(round_index); }

 private:
  SecretKey key_;
  CipherParams params_;
  std::vector<RoundMaterial> materials_;
  SecondOrderStepper caf_;
};

CipherRecord encrypt_block(const Block& plaintext, const SecretKey& key, const CipherParams& params,
                           const Block& rid);
Block decrypt_block(const CipherRecord& record, const SecretKey& key, const CipherParams& params);

// Appends k bytes of value k (1..16).
std::vector<std::uint8_t> pad_message(std::span<const std::uint8_t> message);
// Throws PaddingError.
std::vector<std::uint8_t> unpad_message(std::span<const std::uint8_t> padded);

// workers == 0 uses std::thread::hardware_concurrency(). Rids are drawn in
// block order before any worker starts, so a seeded source gives stable output.
std::vector<CipherRecord> encrypt_stream(std::span<const std::uint8_t> plaintext, const SecretKey& key,
                                         const CipherParams& params, RidSource& rids, std::size_t workers = 1);
std::vector<std::uint8_t> decrypt_stream(std::span<const CipherRecord> records, const SecretKey& key,
                                         const CipherParams& params, std::size_t workers = 1);

}  // namespace rpca
