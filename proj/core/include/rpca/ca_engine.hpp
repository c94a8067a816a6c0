#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpca/configuration.hpp"
#include "rpca/rule.hpp"

namespace rpca {

enum class Boundary { null, cyclic };

Boundary parse_boundary(std::string_view text);
std::string_view to_string(Boundary boundary) noexcept;

/// Per-cell rule assignment. A uniform vector holds a single rule that applies
/// to any cell count; a hybrid vector holds one rule per cell.
class RuleVector {
 public:
  static RuleVector uniform(RuleTable rule);
  static RuleVector hybrid(std::vector<RuleTable> rules);
  // "51,51,195,153" -> hybrid radius-r vector (a single entry stays hybrid).
  static RuleVector parse(std::string_view csv, int radius = 1);

  bool is_uniform() const noexcept { return uniform_; }
  int radius() const noexcept { return rules_.front().radius(); }
  // Number of stored rules: 1 when uniform.
  std::size_t size() const noexcept { return rules_.size(); }
  bool compatible_with(std::size_t cells) const noexcept { return uniform_ || rules_.size() == cells; }

  const RuleTable& rule_for(std::size_t cell) const noexcept { return uniform_ ? rules_.front() : rules_[cell]; }
  const std::vector<RuleTable>& rules() const noexcept { return rules_; }

  std::string to_string() const;

 private:
  RuleVector(std::vector<RuleTable> rules, bool uniform);

  std::vector<RuleTable> rules_;
  bool uniform_;
};

// Largest cell count accepted by the exhaustive (2^cells) analyses.
inline constexpr std::size_t kMaxExhaustiveCells = 20;

struct CycleReport {
  std::vector<std::vector<Configuration>> cycles;
  std::vector<Configuration> transient_states;
};

namespace detail {

inline bool read_cell(const Configuration& config, std::ptrdiff_t cell, Boundary boundary) noexcept {
  const auto n = static_cast<std::ptrdiff_t>(config.size());
  if (cell >= 0 && cell < n) {
    return config.get(static_cast<std::size_t>(cell));
  }
  if (boundary == Boundary::null) {
    return false;
  }
  return config.get(static_cast<std::size_t>(((cell % n) + n) % n));
}

// Calls fn(cell, pattern) for every cell, sliding the neighborhood window
// left to right so each cell costs one read.
template <typename Fn>
void for_each_neighborhood(const Configuration& config, int radius, Boundary boundary, Fn&& fn) {
  const auto n = static_cast<std::ptrdiff_t>(config.size());
  const std::uint32_t mask = (std::uint32_t{1} << (2 * radius + 1)) - 1;
  std::uint32_t pattern = 0;
  for (std::ptrdiff_t k = -radius; k < radius; ++k) {
    pattern = (pattern << 1) | static_cast<std::uint32_t>(read_cell(config, k, boundary));
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    pattern = ((pattern << 1) | static_cast<std::uint32_t>(read_cell(config, i + radius, boundary))) & mask;
    fn(static_cast<std::size_t>(i), pattern);
  }
}

}  // namespace detail

Neighborhood neighborhood_of(const Configuration& config, std::size_t cell, int radius, Boundary boundary);

Configuration step(const Configuration& config, const RuleVector& rules, Boundary boundary);
Configuration iterate(const Configuration& config, const RuleVector& rules, Boundary boundary, std::size_t steps);

// Exhaustive injectivity check over all 2^cells configurations.
bool is_reversible_global(const RuleVector& rules, Boundary boundary, std::size_t cells);

// Rule numbers whose uniform cyclic global map is injective at every size.
std::vector<unsigned> enumerate_reversible_elementary(int radius, std::span<const std::size_t> cell_sizes);

CycleReport cycle_structure(const RuleVector& rules, Boundary boundary, std::size_t cells);

// One line per cycle, states joined by "->", then one "transient:" line if any.
std::string format_cycle_report(const CycleReport& report);

}  // namespace rpca
