#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rpca/ca_engine.hpp"
#include "rpca/configuration.hpp"
#include "rpca/rule.hpp"

namespace rpca {

struct ControlBits {
  bool c1 = false;
  bool c2 = false;

  bool operator==(const ControlBits&) const = default;
};

/// Maps a cell's control pair (C1, C2) to a rule number.
class SelectionTable {
 public:
  // Rules indexed by (c1 << 1) | c2.
  explicit SelectionTable(std::array<RuleNumber, 4> rules, int radius = 1);

  // (0,0)->51, (0,1)->51, (1,0)->195, (1,1)->153
  static SelectionTable legacy_cycle();
  // (0,0)->204, (0,1)->204, (1,0)->240, (1,1)->170
  static SelectionTable reversible_shift();

  RuleNumber select(bool c1, bool c2) const noexcept { return rules_[(c1 ? 2u : 0u) | (c2 ? 1u : 0u)]; }
  int radius() const noexcept { return radius_; }

  // First control pair that selects `rule`; throws std::invalid_argument if none does.
  ControlBits controls_for(RuleNumber rule) const;

 private:
  std::array<RuleNumber, 4> rules_;
  int radius_;
};

RuleNumber select_rule(const SelectionTable& table, bool c1, bool c2);

/// Control pairs per time step and cell. A single row is reused for every step.
class ControlProgram {
 public:
  explicit ControlProgram(std::vector<std::vector<ControlBits>> rows);
  static ControlProgram constant(std::vector<ControlBits> controls);

  std::size_t width() const noexcept { return rows_.front().size(); }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::span<const ControlBits> at_step(std::size_t t) const noexcept {
    return rows_.size() == 1 ? rows_.front() : rows_[t % rows_.size()];
  }

 private:
  std::vector<std::vector<ControlBits>> rows_;
};

std::vector<ControlBits> controls_for(std::span<const RuleNumber> rules, const SelectionTable& table);

RuleVector induced_rule_vector(std::span<const ControlBits> controls, const SelectionTable& table);

Configuration pca_step(const Configuration& config, std::span<const ControlBits> controls,
                       const SelectionTable& table, Boundary boundary);

// Applies `steps` PCA steps, step t driven by program.at_step(t).
Configuration pca_run(const Configuration& config, const ControlProgram& program, const SelectionTable& table,
                      Boundary boundary, std::size_t steps);

// Length of the cycle through `config`; throws UnsupportedOrbitError when the
// state is transient. Needs config.size() <= kMaxExhaustiveCells.
std::size_t orbit_length(const Configuration& config, const RuleVector& rules, Boundary boundary);

// Legacy cycle cipher: p/2 steps forward where p is the (even) orbit length.
Configuration cycle_encipher(const Configuration& plaintext, const RuleVector& rules, Boundary boundary);
// The remaining p - p/2 steps of the orbit.
Configuration cycle_decipher(const Configuration& ciphertext, const RuleVector& rules, Boundary boundary);

}  // namespace rpca
