#include "rpca/pca.hpp"

#include <stdexcept>

#include "rpca/errors.hpp"

namespace rpca {

namespace {

void check_width(std::size_t controls, std::size_t cells) {
  if (controls != cells) {
    throw std::invalid_argument("control width " + std::to_string(controls) + " does not match " +
                                std::to_string(cells) + " cells");
  }
}

}  // namespace

SelectionTable::SelectionTable(std::array<RuleNumber, 4> rules, int radius) : rules_(rules), radius_(radius) {
  for (auto r : rules_) {
    make_rule(radius_, r);  // validates range
  }
}

SelectionTable SelectionTable::legacy_cycle() { return SelectionTable({51, 51, 195, 153}); }

SelectionTable SelectionTable::reversible_shift() { return SelectionTable({204, 204, 240, 170}); }

ControlBits SelectionTable::controls_for(RuleNumber rule) const {
  for (unsigned i = 0; i < 4; ++i) {
    if (rules_[i] == rule) {
      return {(i & 2u) != 0, (i & 1u) != 0};
    }
  }
  throw std::invalid_argument("rule " + to_string(rule) + " is not selectable by this table");
}

RuleNumber select_rule(const SelectionTable& table, bool c1, bool c2) { return table.select(c1, c2); }

ControlProgram::ControlProgram(std::vector<std::vector<ControlBits>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw std::invalid_argument("control program needs at least one non-empty row");
  }
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) {
      throw std::invalid_argument("control program rows must share one width");
    }
  }
}

ControlProgram ControlProgram::constant(std::vector<ControlBits> controls) {
  std::vector<std::vector<ControlBits>> rows;
  rows.push_back(std::move(controls));
  return ControlProgram(std::move(rows));
}

std::vector<ControlBits> controls_for(std::span<const RuleNumber> rules, const SelectionTable& table) {
  std::vector<ControlBits> out;
  out.reserve(rules.size());
  for (auto r : rules) {
    out.push_back(table.controls_for(r));
  }
  return out;
}

RuleVector induced_rule_vector(std::span<const ControlBits> controls, const SelectionTable& table) {
  std::vector<RuleTable> rules;
  rules.reserve(controls.size());
  for (const auto& c : controls) {
    rules.push_back(make_rule(table.radius(), table.select(c.c1, c.c2)));
  }
  return RuleVector::hybrid(std::move(rules));
}

Configuration pca_step(const Configuration& config, std::span<const ControlBits> controls,
                       const SelectionTable& table, Boundary boundary) {
  check_width(controls.size(), config.size());
  return step(config, induced_rule_vector(controls, table), boundary);
}

Configuration pca_run(const Configuration& config, const ControlProgram& program, const SelectionTable& table,
                      Boundary boundary, std::size_t steps) {
  check_width(program.width(), config.size());
  Configuration current = config;
  for (std::size_t t = 0; t < steps; ++t) {
    current = pca_step(current, program.at_step(t), table, boundary);
  }
  return current;
}

std::size_t orbit_length(const Configuration& config, const RuleVector& rules, Boundary boundary) {
  if (config.size() > kMaxExhaustiveCells) {
    throw std::invalid_argument("orbit search needs at most " + std::to_string(kMaxExhaustiveCells) + " cells");
  }
  // A state on a cycle returns within 2^cells steps; otherwise it is transient.
  const std::size_t limit = std::size_t{1} << config.size();
  Configuration current = config;
  for (std::size_t p = 1; p <= limit; ++p) {
    current = step(current, rules, boundary);
    if (current == config) {
      return p;
    }
  }
  throw UnsupportedOrbitError("state " + config.to_string() + " is transient; it never returns to itself");
}

namespace {

std::size_t even_orbit(const Configuration& config, const RuleVector& rules, Boundary boundary) {
  const std::size_t p = orbit_length(config, rules, boundary);
  if (p % 2 != 0) {
    throw UnsupportedOrbitError("state " + config.to_string() + " lies on a cycle of odd length " +
                                std::to_string(p));
  }
  return p;
}

}  // namespace

Configuration cycle_encipher(const Configuration& plaintext, const RuleVector& rules, Boundary boundary) {
  const std::size_t p = even_orbit(plaintext, rules, boundary);
  return iterate(plaintext, rules, boundary, p / 2);
}

Configuration cycle_decipher(const Configuration& ciphertext, const RuleVector& rules, Boundary boundary) {
  // The ciphertext sits on the same cycle as its plaintext.
  const std::size_t p = even_orbit(ciphertext, rules, boundary);
  return iterate(ciphertext, rules, boundary, p - p / 2);
}

}  // namespace rpca
