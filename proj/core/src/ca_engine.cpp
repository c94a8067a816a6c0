#include "rpca/ca_engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rpca {

namespace {

void check_exhaustive(std::size_t cells) {
  if (cells == 0 || cells > kMaxExhaustiveCells) {
    throw std::invalid_argument("exhaustive analysis needs 1.." + std::to_string(kMaxExhaustiveCells) +
                                " cells, got " + std::to_string(cells));
  }
}

void check_compatible(const RuleVector& rules, std::size_t cells) {
  if (!rules.compatible_with(cells)) {
    throw std::invalid_argument("rule vector of length " + std::to_string(rules.size()) + " does not fit " +
                                std::to_string(cells) + " cells");
  }
}

// Successor of every state, indexed with cell 0 as the most significant bit.
std::vector<std::uint32_t> successor_table(const RuleVector& rules, Boundary boundary, std::size_t cells) {
  const std::size_t states = std::size_t{1} << cells;
  std::vector<std::uint32_t> next(states);
  for (std::size_t s = 0; s < states; ++s) {
    next[s] = static_cast<std::uint32_t>(step(Configuration::from_index(s, cells), rules, boundary).to_index());
  }
  return next;
}

}  // namespace

Boundary parse_boundary(std::string_view text) {
  if (text == "null") {
    return Boundary::null;
  }
  if (text == "cyclic") {
    return Boundary::cyclic;
  }
  throw std::invalid_argument("boundary must be 'null' or 'cyclic', got '" + std::string(text) + "'");
}

std::string_view to_string(Boundary boundary) noexcept {
  return boundary == Boundary::null ? "null" : "cyclic";
}

RuleVector::RuleVector(std::vector<RuleTable> rules, bool uniform) : rules_(std::move(rules)), uniform_(uniform) {
  if (rules_.empty()) {
    throw std::invalid_argument("rule vector is empty");
  }
  const int radius = rules_.front().radius();
  for (const auto& r : rules_) {
    if (r.radius() != radius) {
      throw std::invalid_argument("all rules in a vector must share one radius");
    }
  }
}

RuleVector RuleVector::uniform(RuleTable rule) { return RuleVector({rule}, true); }

RuleVector RuleVector::hybrid(std::vector<RuleTable> rules) { return RuleVector(std::move(rules), false); }

RuleVector RuleVector::parse(std::string_view csv, int radius) {
  std::vector<RuleTable> rules;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    auto field = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    rules.push_back(make_rule(radius, parse_rule_number(field)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return hybrid(std::move(rules));
}

std::string RuleVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += rpca::to_string(rules_[i].number());
  }
  return out;
}

Neighborhood neighborhood_of(const Configuration& config, std::size_t cell, int radius, Boundary boundary) {
  Neighborhood n{0, static_cast<std::size_t>(2 * radius + 1)};
  const auto center = static_cast<std::ptrdiff_t>(cell);
  for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
    n.pattern = (n.pattern << 1) | static_cast<std::uint32_t>(detail::read_cell(config, center + k, boundary));
  }
  return n;
}

Configuration step(const Configuration& config, const RuleVector& rules, Boundary boundary) {
  check_compatible(rules, config.size());
  Configuration next(config.size());
  if (rules.is_uniform()) {
    const RuleTable& rule = rules.rule_for(0);
    detail::for_each_neighborhood(config, rule.radius(), boundary,
                                  [&](std::size_t i, std::uint32_t pattern) { next.set(i, rule.at(pattern)); });
  } else {
    detail::for_each_neighborhood(config, rules.radius(), boundary, [&](std::size_t i, std::uint32_t pattern) {
      next.set(i, rules.rule_for(i).at(pattern));
    });
  }
  return next;
}

Configuration iterate(const Configuration& config, const RuleVector& rules, Boundary boundary, std::size_t steps) {
  check_compatible(rules, config.size());
  Configuration current = config;
  for (std::size_t t = 0; t < steps; ++t) {
    current = step(current, rules, boundary);
  }
  return current;
}

bool is_reversible_global(const RuleVector& rules, Boundary boundary, std::size_t cells) {
  check_exhaustive(cells);
  check_compatible(rules, cells);
  const std::size_t states = std::size_t{1} << cells;
  std::vector<bool> seen(states, false);
  for (std::size_t s = 0; s < states; ++s) {
    const auto image = step(Configuration::from_index(s, cells), rules, boundary).to_index();
    if (seen[image]) {
      return false;
    }
    seen[image] = true;
  }
  return true;
}

std::vector<unsigned> enumerate_reversible_elementary(int radius, std::span<const std::size_t> cell_sizes) {
  if (radius != 1) {
    throw std::invalid_argument("reversible census is defined for radius 1 only");
  }
  for (auto size : cell_sizes) {
    if (size == 0 || size > 16) {
      throw std::invalid_argument("census cell sizes must be in 1..16");
    }
  }
  std::vector<unsigned> result;
  for (unsigned number = 0; number < 256; ++number) {
    const auto rules = RuleVector::uniform(make_rule(1, number));
    const bool all = std::all_of(cell_sizes.begin(), cell_sizes.end(), [&](std::size_t size) {
      return is_reversible_global(rules, Boundary::cyclic, size);
    });
    if (all) {
      result.push_back(number);
    }
  }
  return result;
}

CycleReport cycle_structure(const RuleVector& rules, Boundary boundary, std::size_t cells) {
  check_exhaustive(cells);
  check_compatible(rules, cells);
  const auto next = successor_table(rules, boundary, cells);
  const std::size_t states = next.size();

  // 0 = unvisited, 1 = on the current walk, 2 = finished
  std::vector<std::uint8_t> mark(states, 0);
  std::vector<bool> on_cycle(states, false);
  std::vector<std::uint32_t> walk;
  CycleReport report;

  for (std::size_t start = 0; start < states; ++start) {
    if (mark[start] != 0) {
      continue;
    }
    walk.clear();
    std::uint32_t s = static_cast<std::uint32_t>(start);
    while (mark[s] == 0) {
      mark[s] = 1;
      walk.push_back(s);
      s = next[s];
    }
    if (mark[s] == 1) {
      // Closed a new cycle; rotate so it starts at its smallest state.
      auto first = std::find(walk.begin(), walk.end(), s);
      std::vector<std::uint32_t> cycle(first, walk.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      std::vector<Configuration> states_on_cycle;
      states_on_cycle.reserve(cycle.size());
      for (auto c : cycle) {
        on_cycle[c] = true;
        states_on_cycle.push_back(Configuration::from_index(c, cells));
      }
      report.cycles.push_back(std::move(states_on_cycle));
    }
    for (auto w : walk) {
      mark[w] = 2;
    }
  }

  std::sort(report.cycles.begin(), report.cycles.end(),
            [](const auto& a, const auto& b) { return a.front().to_index() < b.front().to_index(); });
  for (std::size_t s = 0; s < states; ++s) {
    if (!on_cycle[s]) {
      report.transient_states.push_back(Configuration::from_index(s, cells));
    }
  }
  return report;
}

std::string format_cycle_report(const CycleReport& report) {
  std::ostringstream out;
  for (const auto& cycle : report.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i != 0) {
        out << "->";
      }
      out << cycle[i].to_string();
    }
    out << '\n';
  }
  if (!report.transient_states.empty()) {
    out << "transient:";
    for (const auto& s : report.transient_states) {
      out << ' ' << s.to_string();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rpca
