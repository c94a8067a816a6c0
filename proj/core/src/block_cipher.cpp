#include "rpca/block_cipher.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "rpca/errors.hpp"

namespace rpca {

namespace {

constexpr Boundary kCipherBoundary = Boundary::cyclic;

// Bits 0..count-1 of an MSB-first byte string, packed LSB-first into words.
RuleTable::Entries pack_entries(std::span<const std::uint8_t> bytes, std::size_t count) {
  RuleTable::Entries entries{0, 0};
  for (std::size_t p = 0; p < count; ++p) {
    if (bit_at(bytes, p)) {
      entries[p >> 6] |= std::uint64_t{1} << (p & 63);
    }
  }
  return entries;
}

// Two-bit value from material bits (i, i+1), bit i most significant.
unsigned two_bits(const Block& material, std::size_t i) {
  return (static_cast<unsigned>(bit_at(material, i)) << 1) | static_cast<unsigned>(bit_at(material, i + 1));
}

Block concat(const Configuration& left, const Configuration& right) {
  const auto l = left.to_bytes();
  const auto r = right.to_bytes();
  Block out{};
  std::copy_n(l.begin(), 8, out.begin());
  std::copy_n(r.begin(), 8, out.begin() + 8);
  return out;
}

std::size_t resolve_workers(std::size_t workers, std::size_t blocks) {
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  return std::max<std::size_t>(1, std::min(workers, blocks));
}

// Runs fn(i) for i in [0, count) split into contiguous chunks, one per worker.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = resolve_workers(workers, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

}  // namespace

Segment64 SecretKey::cal_segment() const noexcept {
  Segment64 out{};
  std::copy_n(raw_.begin(), 8, out.begin());
  return out;
}

Segment64 SecretKey::car_segment() const noexcept {
  Segment64 out{};
  std::copy_n(raw_.begin() + 8, 8, out.begin());
  return out;
}

Block SecretKey::caf_segment() const noexcept {
  Block out{};
  std::copy_n(raw_.begin() + 16, 16, out.begin());
  return out;
}

SecretKey parse_key(std::span<const std::uint8_t> raw) {
  if (raw.size() != kKeyBytes) {
    throw KeyFormatError("key must be exactly 256 bits (32 bytes), got " + std::to_string(raw.size()) + " bytes");
  }
  SecretKey::Raw bytes;
  std::copy(raw.begin(), raw.end(), bytes.begin());
  return SecretKey(bytes);
}

SecretKey parse_key_hex(std::string_view hex) {
  if (hex.size() != 2 * kKeyBytes) {
    throw KeyFormatError("hex key must be 64 characters, got " + std::to_string(hex.size()));
  }
  try {
    return parse_key(from_hex(hex));
  } catch (const std::invalid_argument& e) {
    throw KeyFormatError(std::string("bad hex key: ") + e.what());
  }
}

void CipherParams::validate() const {
  if (rounds < kMinRounds || rounds > kMaxRounds) {
    throw std::out_of_range("rounds must be in 1..64, got " + std::to_string(rounds));
  }
  if (caf_steps < kMinCafSteps || caf_steps > kMaxCafSteps) {
    throw std::out_of_range("caf_steps must be in 2..1024, got " + std::to_string(caf_steps));
  }
}

RuleTable expand_rule_segment(const Segment64& segment) {
  const auto half = pack_entries(segment, 64);
  return RuleTable(3, {half[0], half[0]});
}

RuleTable caf_rule(const SecretKey& key) {
  const Block segment = key.caf_segment();
  return RuleTable(3, pack_entries(segment, 128));
}

Segment64 round_constant(std::size_t round_index) {
  Segment64 out{};
  out.fill(static_cast<std::uint8_t>((round_index + 1) & 0xFF));
  return out;
}

RoundMaterial derive_round_material(const SecretKey& key, std::size_t round_index) {
  const Segment64 rc = round_constant(round_index);

  auto newest_four = [&](const Segment64& segment) {
    const SecondOrderStepper stepper(expand_rule_segment(segment), kCipherBoundary);
    Configuration prev = to_configuration(rc);
    Configuration curr = to_configuration(segment);
    std::vector<Configuration> history;
    for (int t = 0; t < 4; ++t) {
      stepper.advance(prev, curr);
      history.push_back(curr);
    }
    return history;  // oldest first
  };

  const auto left = newest_four(key.cal_segment());
  const auto right = newest_four(key.car_segment());
  return RoundMaterial{
      concat(left[3], right[3]),
      concat(left[2], right[2]),
      concat(left[1], right[1]),
      concat(left[0], right[0]),
  };
}

Block byte_substitution(const Block& state, const Block& material, Direction direction) {
  Block out{};
  for (std::size_t j = 0; j < kBlockBytes; ++j) {
    const int r = material[(j + 1) % kBlockBytes] & 7;
    if (direction == Direction::forward) {
      out[j] = static_cast<std::uint8_t>(std::rotl(state[j], r) ^ material[j]);
    } else {
      out[j] = std::rotr(static_cast<std::uint8_t>(state[j] ^ material[j]), r);
    }
  }
  return out;
}

Block row_shift(const Block& state, const Block& material, Direction direction) {
  Block out{};
  for (std::size_t row = 0; row < 4; ++row) {
    const std::size_t s = two_bits(material, 2 * row);
    for (std::size_t k = 0; k < 4; ++k) {
      if (direction == Direction::forward) {
        out[4 * row + k] = state[4 * row + (k + s) % 4];
      } else {
        out[4 * row + (k + s) % 4] = state[4 * row + k];
      }
    }
  }
  return out;
}

Block column_mix(const Block& state, const Block& material, Direction direction) {
  Block out{};
  for (std::size_t col = 0; col < 4; ++col) {
    const std::size_t t = two_bits(material, 8 + 2 * col);
    std::array<std::uint8_t, 4> v{};
    if (direction == Direction::forward) {
      std::array<std::uint8_t, 4> x{state[col], state[4 + col], state[8 + col], state[12 + col]};
      x[0] ^= x[1];
      x[2] ^= x[3];
      x[1] ^= x[0];
      x[3] ^= x[2];
      for (std::size_t r = 0; r < 4; ++r) v[(r + t) % 4] = x[r];
    } else {
      for (std::size_t r = 0; r < 4; ++r) v[r] = state[4 * ((r + t) % 4) + col];
      v[3] ^= v[2];
      v[1] ^= v[0];
      v[2] ^= v[3];
      v[0] ^= v[1];
    }
    for (std::size_t r = 0; r < 4; ++r) out[4 * r + col] = v[r];
  }
  return out;
}

Block add_round_key(const Block& state, const Block& material) noexcept { return xor_blocks(state, material); }

Block round_forward(const Block& state, const RoundMaterial& material) {
  Block s = byte_substitution(state, material.sub, Direction::forward);
  s = row_shift(s, material.row, Direction::forward);
  s = column_mix(s, material.mix, Direction::forward);
  return add_round_key(s, material.key);
}

Block round_inverse(const Block& state, const RoundMaterial& material) {
  Block s = add_round_key(state, material.key);
  s = column_mix(s, material.mix, Direction::inverse);
  s = row_shift(s, material.row, Direction::inverse);
  return byte_substitution(s, material.sub, Direction::inverse);
}

Block round_forward(const Block& state, const SecretKey& key, std::size_t round_index) {
  return round_forward(state, derive_round_material(key, round_index));
}

Block round_inverse(const Block& state, const SecretKey& key, std::size_t round_index) {
  return round_inverse(state, derive_round_material(key, round_index));
}

CafOutput caf_core_encrypt(const Block& state, const Block& rid, const SecretKey& key, std::size_t steps) {
  if (steps < CipherParams::kMinCafSteps) {
    throw std::out_of_range("CAF needs at least 2 steps");
  }
  const auto result =
      so_iterate_forward(SecondOrderState(to_configuration(rid), to_configuration(state)), caf_rule(key),
                         kCipherBoundary, steps);
  return {to_block(result.prev), to_block(result.curr)};
}

CafRecovery caf_core_recover(const Block& ciphertext, const Block& final_data, const SecretKey& key,
                             std::size_t steps) {
  if (steps < CipherParams::kMinCafSteps) {
    throw std::out_of_range("CAF needs at least 2 steps");
  }
  const auto result =
      so_iterate_backward(SecondOrderState(to_configuration(ciphertext), to_configuration(final_data)),
                          caf_rule(key), kCipherBoundary, steps);
  return {to_block(result.curr), to_block(result.prev)};
}

Block caf_core_decrypt(const Block& ciphertext, const Block& final_data, const SecretKey& key, std::size_t steps) {
  return caf_core_recover(ciphertext, final_data, key, steps).state;
}

Block mask_final_data(const Block& final_data, const SecretKey& key) noexcept {
  return xor_blocks(final_data, key.caf_segment());
}

std::array<std::uint8_t, CipherRecord::kWireBytes> CipherRecord::to_wire() const noexcept {
  std::array<std::uint8_t, kWireBytes> out;
  std::copy(ciphertext.begin(), ciphertext.end(), out.begin());
  std::copy(encrypted_final_data.begin(), encrypted_final_data.end(), out.begin() + kBlockBytes);
  return out;
}

CipherRecord CipherRecord::from_wire(std::span<const std::uint8_t> bytes, const CipherParams& params) {
  if (bytes.size() != kWireBytes) {
    throw LengthError("cipher record must be 32 bytes, got " + std::to_string(bytes.size()));
  }
  CipherRecord record;
  std::copy_n(bytes.begin(), kBlockBytes, record.ciphertext.begin());
  std::copy_n(bytes.begin() + kBlockBytes, kBlockBytes, record.encrypted_final_data.begin());
  record.params = params;
  return record;
}

BlockCipher::BlockCipher(const SecretKey& key, const CipherParams& params)
    : key_(key), params_(params), caf_(caf_rule(key), kCipherBoundary) {
  params_.validate();
  materials_.reserve(params_.rounds);
  for (std::size_t i = 0; i < params_.rounds; ++i) {
    materials_.push_back(derive_round_material(key_, i));
  }
}

CipherRecord BlockCipher::encrypt(const Block& plaintext, const Block& rid) const {
  Block state = plaintext;
  for (const auto& m : materials_) {
    state = round_forward(state, m);
  }
  Configuration prev = to_configuration(rid);
  Configuration curr = to_configuration(state);
  for (unsigned t = 0; t < params_.caf_steps; ++t) {
    caf_.advance(prev, curr);
  }
  return CipherRecord{to_block(prev), mask_final_data(to_block(curr), key_), params_};
}

Block BlockCipher::decrypt(const CipherRecord& record) const {
  if (record.params != params_) {
    throw ParameterMismatchError("record was produced with rounds=" + std::to_string(record.params.rounds) +
                                 " steps=" + std::to_string(record.params.caf_steps) + " but rounds=" +
                                 std::to_string(params_.rounds) + " steps=" + std::to_string(params_.caf_steps) +
                                 " were supplied");
  }
  // Forward iteration on the swapped pair runs the trajectory backwards.
  Configuration prev = to_configuration(mask_final_data(record.encrypted_final_data, key_));
  Configuration curr = to_configuration(record.ciphertext);
  for (unsigned t = 0; t < params_.caf_steps; ++t) {
    caf_.advance(prev, curr);
  }
  Block state = to_block(prev);
  for (auto it = materials_.rbegin(); it != materials_.rend(); ++it) {
    state = round_inverse(state, *it);
  }
  return state;
}

CipherRecord encrypt_block(const Block& plaintext, const SecretKey& key, const CipherParams& params,
                           const Block& rid) {
  return BlockCipher(key, params).encrypt(plaintext, rid);
}

Block decrypt_block(const CipherRecord& record, const SecretKey& key, const CipherParams& params) {
  return BlockCipher(key, params).decrypt(record);
}

std::vector<std::uint8_t> pad_message(std::span<const std::uint8_t> message) {
  const std::size_t k = kBlockBytes - message.size() % kBlockBytes;
  std::vector<std::uint8_t> out(message.begin(), message.end());
  out.insert(out.end(), k, static_cast<std::uint8_t>(k));
  return out;
}

std::vector<std::uint8_t> unpad_message(std::span<const std::uint8_t> padded) {
  if (padded.empty() || padded.size() % kBlockBytes != 0) {
    throw PaddingError("padded length " + std::to_string(padded.size()) + " is not a positive multiple of 16");
  }
  const std::size_t k = padded.back();
  if (k < 1 || k > kBlockBytes) {
    throw PaddingError("invalid padding length " + std::to_string(k));
  }
  for (std::size_t i = padded.size() - k; i < padded.size(); ++i) {
    if (padded[i] != k) {
      throw PaddingError("inconsistent padding bytes");
    }
  }
  return {padded.begin(), padded.end() - static_cast<std::ptrdiff_t>(k)};
}

std::vector<CipherRecord> encrypt_stream(std::span<const std::uint8_t> plaintext, const SecretKey& key,
                                         const CipherParams& params, RidSource& rids, std::size_t workers) {
  const BlockCipher cipher(key, params);
  const auto padded = pad_message(plaintext);
  const std::size_t blocks = padded.size() / kBlockBytes;

  std::vector<Block> rid_values(blocks);
  for (auto& rid : rid_values) {
    rid = rids.draw();
  }

  std::vector<CipherRecord> records(blocks);
  parallel_for(blocks, workers, [&](std::size_t i) {
    Block block;
    std::copy_n(padded.begin() + static_cast<std::ptrdiff_t>(i * kBlockBytes), kBlockBytes, block.begin());
    records[i] = cipher.encrypt(block, rid_values[i]);
  });
  return records;
}

std::vector<std::uint8_t> decrypt_stream(std::span<const CipherRecord> records, const SecretKey& key,
                                         const CipherParams& params, std::size_t workers) {
  if (records.empty()) {
    throw FormatError("record sequence is empty; at least the padding block is required");
  }
  const BlockCipher cipher(key, params);
  for (const auto& r : records) {
    if (r.params != params) {
      throw ParameterMismatchError("record parameters differ from the supplied parameters");
    }
  }
  std::vector<std::uint8_t> padded(records.size() * kBlockBytes);
  parallel_for(records.size(), workers, [&](std::size_t i) {
    const Block block = cipher.decrypt(records[i]);
    std::copy(block.begin(), block.end(), padded.begin() + static_cast<std::ptrdiff_t>(i * kBlockBytes));
  });
  return unpad_message(padded);
}

}  // namespace rpca
