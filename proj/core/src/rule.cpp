#include "rpca/rule.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpca {

namespace {

void check_radius(int radius) {
  if (radius < 1 || radius > kMaxRadius) {
    throw std::out_of_range("rule radius must be in 1.." + std::to_string(kMaxRadius) + ", got " +
                            std::to_string(radius));
  }
}

RuleTable::Entries entry_mask(int radius) {
  const std::size_t count = std::size_t{1} << (2 * radius + 1);
  if (count >= 128) {
    return {~std::uint64_t{0}, ~std::uint64_t{0}};
  }
  if (count == 64) {
    return {~std::uint64_t{0}, 0};
  }
  return {(std::uint64_t{1} << count) - 1, 0};
}

}  // namespace

std::string to_string(RuleNumber value) {
  if (value == 0) {
    return "0";
  }
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

RuleNumber parse_rule_number(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rule number");
  }
  RuleNumber value = 0;
  const RuleNumber limit = ~RuleNumber{0};
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("rule number must be decimal: " + std::string(text));
    }
    const auto digit = static_cast<unsigned>(c - '0');
    if (value > (limit - digit) / 10) {
      throw std::out_of_range("rule number exceeds 128 bits: " + std::string(text));
    }
    value = value * 10 + digit;
  }
  return value;
}

Neighborhood Neighborhood::from_string(std::string_view bits) {
  if (bits.empty() || bits.size() > 2 * kMaxRadius + 1) {
    throw std::invalid_argument("neighborhood width must be 1.." + std::to_string(2 * kMaxRadius + 1));
  }
  Neighborhood n{0, bits.size()};
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("neighborhood may only contain '0' and '1'");
    }
    n.pattern = (n.pattern << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return n;
}

RuleTable::RuleTable(int radius, Entries entries) : radius_(radius), entries_(entries) {
  check_radius(radius);
  const auto mask = entry_mask(radius);
  if ((entries[0] & ~mask[0]) != 0 || (entries[1] & ~mask[1]) != 0) {
    throw std::invalid_argument("rule table has entries beyond 2^(2r+1)");
  }
}

RuleNumber RuleTable::number() const noexcept {
  return (static_cast<RuleNumber>(entries_[1]) << 64) | entries_[0];
}

RuleNumber max_rule_number(int radius) {
  check_radius(radius);
  const auto mask = entry_mask(radius);
  return (static_cast<RuleNumber>(mask[1]) << 64) | mask[0];
}

RuleTable make_rule(int radius, RuleNumber rule_number) {
  const RuleNumber max = max_rule_number(radius);
  if (rule_number > max) {
    throw std::out_of_range("rule " + to_string(rule_number) + " out of range for radius " + std::to_string(radius) +
                            " (maximum " + to_string(max) + ")");
  }
  return RuleTable(radius, {static_cast<std::uint64_t>(rule_number), static_cast<std::uint64_t>(rule_number >> 64)});
}

bool apply_rule(const RuleTable& rule, Neighborhood neighborhood) {
  if (neighborhood.width != rule.width()) {
    throw std::invalid_argument("neighborhood width " + std::to_string(neighborhood.width) + " does not match rule width " +
                                std::to_string(rule.width()));
  }
  return rule.at(neighborhood.pattern);
}

RuleTable complement_rule(const RuleTable& rule) {
  const auto mask = entry_mask(rule.radius());
  const auto& e = rule.entries();
  return RuleTable(rule.radius(), {~e[0] & mask[0], ~e[1] & mask[1]});
}

}  // namespace rpca
