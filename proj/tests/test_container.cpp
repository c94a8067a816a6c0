#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "rpca/container.hpp"
#include "rpca/errors.hpp"

using namespace rpca;

namespace {

std::vector<CipherRecord> random_records(std::mt19937_64& rng, std::size_t n, const CipherParams& params) {
  std::vector<CipherRecord> out(n);
  for (auto& r : out) {
    for (auto& b : r.ciphertext) b = static_cast<std::uint8_t>(rng());
    for (auto& b : r.encrypted_final_data) b = static_cast<std::uint8_t>(rng());
    r.params = params;
  }
  return out;
}

}  // namespace

TEST(Container, EmptyPlaintextIsHeaderPlusOneRecord) {
  std::mt19937_64 rng(1);
  const ContainerHeader header{{10, 32}, 0};
  const auto bytes = write_container(header, random_records(rng, 1, header.params));
  EXPECT_EQ(bytes.size(), 18u + 32u);
}

TEST(Container, HeaderLayoutIsBigEndian) {
  std::mt19937_64 rng(2);
  const ContainerHeader header{{7, 0x0123}, 0x0127};
  const auto bytes = write_container(header, random_records(rng, header.record_count(), header.params));
  const std::vector<std::uint8_t> expected{'R', 'P', 'C', '1', 1, 7, 0x01, 0x23,
                                           0, 0, 0, 0, 0, 0, 0x01, 0x27, 0, 0};
  EXPECT_EQ(std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 18), expected);
}

TEST(Container, RandomPayloadsRoundTripBitExactly) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const CipherParams params{static_cast<unsigned>(1 + rng() % 64), static_cast<unsigned>(2 + rng() % 1023)};
    const std::uint64_t length = rng() % 200;
    const ContainerHeader header{params, length};
    const auto records = random_records(rng, header.record_count(), params);
    const auto bytes = write_container(header, records);
    const auto c = read_container(bytes);
    EXPECT_EQ(c.header, header);
    EXPECT_EQ(c.records, records);
    EXPECT_EQ(write_container(c.header, c.records), bytes);
  }
}

TEST(Container, Rejections) {
  std::mt19937_64 rng(4);
  const ContainerHeader header{{10, 32}, 40};
  const auto good = write_container(header, random_records(rng, 3, header.params));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(read_container(bad_magic), UnsupportedFormatError);

  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_THROW(read_container(bad_version), UnsupportedFormatError);

  for (std::size_t cut : {1u, 17u, 18u, 31u, 50u, 114u}) {
    const std::vector<std::uint8_t> truncated(good.begin(), good.begin() + static_cast<std::ptrdiff_t>(good.size() - cut));
    EXPECT_THROW(read_container(truncated), LengthError) << cut;
  }
  auto extra = good;
  extra.resize(good.size() + 32);
  EXPECT_THROW(read_container(extra), LengthError);

  auto zero_rounds = good;
  zero_rounds[5] = 0;
  EXPECT_THROW(read_container(zero_rounds), ValidationError);
  auto many_rounds = good;
  many_rounds[5] = 65;
  EXPECT_THROW(read_container(many_rounds), ValidationError);
  auto few_steps = good;
  few_steps[6] = 0;
  few_steps[7] = 1;
  EXPECT_THROW(read_container(few_steps), ValidationError);
  auto many_steps = good;
  many_steps[6] = 0x04;
  many_steps[7] = 0x01;
  EXPECT_THROW(read_container(many_steps), ValidationError);
  auto reserved = good;
  reserved[17] = 1;
  EXPECT_THROW(read_container(reserved), ValidationError);

  EXPECT_THROW(write_container(header, random_records(rng, 2, header.params)), ValidationError);
  EXPECT_THROW(write_container({{0, 32}, 0}, random_records(rng, 1, header.params)), ValidationError);
}

TEST(Container, ErrorsShareFormatErrorBase) {
  EXPECT_THROW(read_container(std::vector<std::uint8_t>{'R', 'P'}), FormatError);
  EXPECT_THROW(read_container(std::vector<std::uint8_t>{'Z'}), FormatError);
}

TEST(KeyFile, RawAndHexForms) {
  const auto dir = std::filesystem::temp_directory_path() / "rpca_keyfile_test";
  std::filesystem::create_directories(dir);
  SecretKey::Raw raw;
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<std::uint8_t>(i * 7 + 1);
  const SecretKey key(raw);

  write_key_file(dir / "k.bin", key);
  EXPECT_EQ(std::filesystem::file_size(dir / "k.bin"), 32u);
  EXPECT_EQ(read_key_file(dir / "k.bin"), key);
  const auto perms = std::filesystem::status(dir / "k.bin").permissions();
  EXPECT_EQ(perms & std::filesystem::perms::group_read, std::filesystem::perms::none);

  const std::string hex = to_hex(raw) + "\n";
  EXPECT_EQ(parse_key_file_contents(std::vector<std::uint8_t>(hex.begin(), hex.end())), key);
  EXPECT_THROW(parse_key_file_contents(std::vector<std::uint8_t>(31)), KeyFormatError);
  std::filesystem::remove_all(dir);
}
