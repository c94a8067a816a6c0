#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace rpca {

/// Wolfram rule number. Radius-3 rules have 128 table entries, so the number
/// needs the full 128-bit range.
using RuleNumber = unsigned __int128;

inline constexpr int kMaxRadius = 3;

std::string to_string(RuleNumber value);
// Decimal only; throws std::invalid_argument on junk, std::out_of_range on overflow.
RuleNumber parse_rule_number(std::string_view text);

/// A neighborhood pattern read left-neighbor-first, most significant first,
/// so "110" is pattern 6.
struct Neighborhood {
  std::uint32_t pattern = 0;
  std::size_t width = 0;

  static Neighborhood from_string(std::string_view bits);
};

/// Radius-r local rule as a 2^(2r+1)-entry lookup table. Entry p is the
/// output for neighborhood pattern p, which is also bit p of the rule number.
class RuleTable {
 public:
  using Entries = std::array<std::uint64_t, 2>;

  RuleTable(int radius, Entries entries);

  int radius() const noexcept { return radius_; }
  std::size_t width() const noexcept { return static_cast<std::size_t>(2 * radius_ + 1); }
  std::size_t size() const noexcept { return std::size_t{1} << width(); }

  bool at(std::uint32_t pattern) const noexcept {
    return (entries_[pattern >> 6] >> (pattern & 63)) & 1u;
  }

  RuleNumber number() const noexcept;
  const Entries& entries() const noexcept { return entries_; }

  bool operator==(const RuleTable&) const = default;

 private:
  int radius_;
  Entries entries_;
};

// Largest valid rule number for a radius, i.e. 2^(2^(2r+1)) - 1.
RuleNumber max_rule_number(int radius);

RuleTable make_rule(int radius, RuleNumber rule_number);

bool apply_rule(const RuleTable& rule, Neighborhood neighborhood);

// Flips every table entry: R' = 2^(2^(2r+1)) - R - 1.
RuleTable complement_rule(const RuleTable& rule);

}  // namespace rpca
