#include "rpca/second_order.hpp"

#include <stdexcept>
#include <utility>

namespace rpca {

SecondOrderState::SecondOrderState(Configuration prev_config, Configuration curr_config)
    : prev(std::move(prev_config)), curr(std::move(curr_config)) {
  if (prev.size() != curr.size()) {
    throw std::invalid_argument("second-order state needs equal-length configurations");
  }
}

SecondOrderStepper::SecondOrderStepper(const RuleTable& rule, Boundary boundary)
    : rule_(rule), complement_(complement_rule(rule)), boundary_(boundary) {}

void SecondOrderStepper::advance(Configuration& prev, Configuration& curr) const {
  if (prev.size() != curr.size()) {
    throw std::invalid_argument("second-order state needs equal-length configurations");
  }
  // Cell i of the result only reads prev_i, so it can overwrite prev in place.
  detail::for_each_neighborhood(curr, rule_.radius(), boundary_, [&](std::size_t i, std::uint32_t pattern) {
    const RuleTable& selected = prev.get(i) ? rule_ : complement_;
    prev.set(i, selected.at(pattern));
  });
  std::swap(prev, curr);
}

SecondOrderState SecondOrderStepper::operator()(const SecondOrderState& state) const {
  SecondOrderState next = state;
  advance(next.prev, next.curr);
  return next;
}

SecondOrderState so_step(const SecondOrderState& state, const RuleTable& rule, Boundary boundary) {
  return SecondOrderStepper(rule, boundary)(state);
}

SecondOrderState so_iterate_forward(const SecondOrderState& state, const RuleTable& rule, Boundary boundary,
                                    std::size_t steps) {
  if (steps == 0) {
    throw std::invalid_argument("second-order iteration needs at least one step");
  }
  const SecondOrderStepper stepper(rule, boundary);
  SecondOrderState current = state;
  for (std::size_t t = 0; t < steps; ++t) {
    stepper.advance(current.prev, current.curr);
  }
  return current;
}

SecondOrderState so_iterate_backward(const SecondOrderState& state, const RuleTable& rule, Boundary boundary,
                                     std::size_t steps) {
  return so_iterate_forward(state.swapped(), rule, boundary, steps).swapped();
}

}  // namespace rpca
