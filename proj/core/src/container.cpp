#include "rpca/container.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "rpca/errors.hpp"

namespace rpca {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'R', 'P', 'C', '1'};

void validate_params(unsigned rounds, unsigned caf_steps) {
  if (rounds < CipherParams::kMinRounds || rounds > CipherParams::kMaxRounds) {
    throw ValidationError("rounds field " + std::to_string(rounds) + " outside 1..64");
  }
  if (caf_steps < CipherParams::kMinCafSteps || caf_steps > CipherParams::kMaxCafSteps) {
    throw ValidationError("caf_steps field " + std::to_string(caf_steps) + " outside 2..1024");
  }
}

}  // namespace

std::vector<std::uint8_t> write_container(const ContainerHeader& header, std::span<const CipherRecord> records) {
  validate_params(header.params.rounds, header.params.caf_steps);
  if (records.size() != header.record_count()) {
    throw ValidationError("plaintext length " + std::to_string(header.plaintext_length) + " needs " +
                          std::to_string(header.record_count()) + " records, got " + std::to_string(records.size()));
  }

  std::vector<std::uint8_t> out(ContainerHeader::kSize + records.size() * CipherRecord::kWireBytes);
  auto it = std::copy(kMagic.begin(), kMagic.end(), out.begin());
  *it++ = ContainerHeader::kVersion;
  *it++ = static_cast<std::uint8_t>(header.params.rounds);
  *it++ = static_cast<std::uint8_t>(header.params.caf_steps >> 8);
  *it++ = static_cast<std::uint8_t>(header.params.caf_steps);
  for (int shift = 56; shift >= 0; shift -= 8) {
    *it++ = static_cast<std::uint8_t>(header.plaintext_length >> shift);
  }
  it += 2;

  for (const auto& r : records) {
    const auto wire = r.to_wire();
    it = std::copy(wire.begin(), wire.end(), it);
  }
  return out;
}

Container read_container(std::span<const std::uint8_t> bytes) {
  const std::size_t probe = std::min(bytes.size(), kMagic.size());
  if (!std::equal(kMagic.begin(), kMagic.begin() + static_cast<std::ptrdiff_t>(probe), bytes.begin())) {
    throw UnsupportedFormatError("not an RPC1 container (bad magic)");
  }
  if (bytes.size() < ContainerHeader::kSize) {
    throw LengthError("container truncated inside the 18-byte header");
  }
  if (bytes[4] != ContainerHeader::kVersion) {
    throw UnsupportedFormatError("unsupported container version " + std::to_string(bytes[4]));
  }

  ContainerHeader header;
  header.params.rounds = bytes[5];
  header.params.caf_steps = (static_cast<unsigned>(bytes[6]) << 8) | bytes[7];
  header.plaintext_length = 0;
  for (std::size_t i = 8; i < 16; ++i) {
    header.plaintext_length = (header.plaintext_length << 8) | bytes[i];
  }
  validate_params(header.params.rounds, header.params.caf_steps);
  if (bytes[16] != 0 || bytes[17] != 0) {
    throw ValidationError("reserved header bytes must be zero");
  }

  const std::size_t body = bytes.size() - ContainerHeader::kSize;
  if (body % CipherRecord::kWireBytes != 0) {
    throw LengthError("container body of " + std::to_string(body) + " bytes is not a whole number of 32-byte records");
  }
  const std::size_t count = body / CipherRecord::kWireBytes;
  if (header.plaintext_length > std::uint64_t{1} << 60 || count != header.record_count()) {
    throw LengthError("container holds " + std::to_string(count) + " records but plaintext length " +
                      std::to_string(header.plaintext_length) + " needs " + std::to_string(header.record_count()));
  }

  Container c{header, {}};
  c.records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    c.records.push_back(CipherRecord::from_wire(
        bytes.subspan(ContainerHeader::kSize + i * CipherRecord::kWireBytes, CipherRecord::kWireBytes), header.params));
  }
  return c;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path.string() + "' for reading");
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error("failed reading '" + path.string() + "'");
  }
  return data;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error("failed writing '" + path.string() + "'");
  }
}

SecretKey parse_key_file_contents(std::span<const std::uint8_t> contents) {
  if (contents.size() == kKeyBytes) {
    return parse_key(contents);
  }
  std::string text(contents.begin(), contents.end());
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
  text.erase(std::find_if(text.rbegin(), text.rend(), not_space).base(), text.end());
  if (text.size() == 2 * kKeyBytes) {
    return parse_key_hex(text);
  }
  throw KeyFormatError("key file must hold 32 raw bytes or 64 hex characters, got " +
                       std::to_string(contents.size()) + " bytes");
}

SecretKey read_key_file(const std::filesystem::path& path) { return parse_key_file_contents(read_file(path)); }

void write_key_file(const std::filesystem::path& path, const SecretKey& key) {
  write_file(path, key.raw());
  std::error_code ec;
  std::filesystem::permissions(path, std::filesystem::perms::owner_read | std::filesystem::perms::owner_write,
                               std::filesystem::perm_options::replace, ec);
}

}  // namespace rpca
