#pragma once

#include <cstddef>

#include "rpca/ca_engine.hpp"
#include "rpca/configuration.hpp"
#include "rpca/rule.hpp"

namespace rpca {

/// Two successive configurations (q_{t-1}, q_t) of a second-order automaton.
struct SecondOrderState {
  Configuration prev;
  Configuration curr;

  SecondOrderState(Configuration prev_config, Configuration curr_config);

  SecondOrderState swapped() const { return {curr, prev}; }
  bool operator==(const SecondOrderState&) const = default;
};

// Cell i of the new configuration uses `rule` where prev_i = 1 and its
// complement where prev_i = 0. The old curr becomes the new prev.
SecondOrderState so_step(const SecondOrderState& state, const RuleTable& rule, Boundary boundary);

SecondOrderState so_iterate_forward(const SecondOrderState& state, const RuleTable& rule, Boundary boundary,
                                    std::size_t steps);

// Forward iteration on the swapped pair, swapped back. Undoes so_iterate_forward.
SecondOrderState so_iterate_backward(const SecondOrderState& state, const RuleTable& rule, Boundary boundary,
                                     std::size_t steps);

/// Stepper that holds the rule and its complement for repeated use.
class SecondOrderStepper {
 public:
  SecondOrderStepper(const RuleTable& rule, Boundary boundary);

  SecondOrderState operator()(const SecondOrderState& state) const;
  // Advance in place; avoids reallocating the configurations.
  void advance(Configuration& prev, Configuration& curr) const;

 private:
  RuleTable rule_;
  RuleTable complement_;
  Boundary boundary_;
};

}  // namespace rpca
