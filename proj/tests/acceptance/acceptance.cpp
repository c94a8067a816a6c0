// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rpca/analysis.hpp"
#include "rpca/block_cipher.hpp"
#include "rpca/ca_engine.hpp"
#include "rpca/container.hpp"
#include "rpca/errors.hpp"
#include "rpca/pca.hpp"
#include "rpca/random.hpp"
#include "rpca/second_order.hpp"

using namespace rpca;

namespace {

enum class Verdict { pass, fail };

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

Outcome fail(std::string detail) { return {Verdict::fail, std::move(detail)}; }
Outcome pass(std::string detail = {}) { return {Verdict::pass, std::move(detail)}; }

Configuration random_config(std::mt19937_64& rng, std::size_t cells) {
  Configuration c(cells);
  for (std::size_t i = 0; i < cells; ++i) c.set(i, rng() & 1);
  return c;
}

Block random_block(std::mt19937_64& rng) {
  Block b{};
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

SecretKey random_key(std::mt19937_64& rng) {
  SecretKey::Raw raw{};
  for (auto& x : raw) x = static_cast<std::uint8_t>(rng());
  return SecretKey(raw);
}

RuleVector uniform(unsigned rule) { return RuleVector::uniform(make_rule(1, rule)); }

RuleVector vector_of(std::initializer_list<unsigned> rules) {
  std::vector<RuleTable> tables;
  for (auto r : rules) tables.push_back(make_rule(1, r));
  return RuleVector::hybrid(std::move(tables));
}

Outcome census() {
  const std::vector<std::size_t> sizes{4, 5, 6, 7, 8};
  const auto rules = enumerate_reversible_elementary(1, sizes);
  const std::vector<unsigned> expected{15, 51, 85, 170, 204, 240};
  if (rules != expected) {
    std::ostringstream s;
    for (auto r : rules) s << r << ' ';
    return fail("got { " + s.str() + "}");
  }
  return pass("{15, 51, 85, 170, 204, 240}");
}

Outcome complement_formula() {
  const std::pair<unsigned, unsigned> pairs[] = {{236, 19}, {15, 240}, {51, 204}, {85, 170}};
  for (auto [a, b] : pairs) {
    if (complement_rule(make_rule(1, a)).number() != b || complement_rule(make_rule(1, b)).number() != a) {
      return fail("pair " + std::to_string(a) + "/" + std::to_string(b));
    }
  }
  for (unsigned r = 0; r < 256; ++r) {
    const auto rule = make_rule(1, r);
    const auto c = complement_rule(rule);
    if (c.number() != 255u - r || complement_rule(c) != rule) return fail("rule " + std::to_string(r));
  }
  return pass("4 pairs, involution over 256 rules");
}

Outcome cycle_claim() {
  const auto rules = vector_of({51, 51, 195, 153});
  const auto report = cycle_structure(rules, Boundary::null, 4);
  if (report.cycles.size() != 4 || !report.transient_states.empty()) {
    return fail(std::to_string(report.cycles.size()) + " cycles");
  }
  std::set<std::size_t> seen;
  for (const auto& cycle : report.cycles) {
    if (cycle.size() != 4) return fail("cycle of length " + std::to_string(cycle.size()));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      seen.insert(static_cast<std::size_t>(cycle[i].to_index()));
      if (step(cycle[i], rules, Boundary::null) != cycle[(i + 1) % cycle.size()]) return fail("broken cycle edge");
    }
  }
  if (seen.size() != 16) return fail("cycles cover " + std::to_string(seen.size()) + " states");
  for (std::uint64_t s = 0; s < 16; ++s) {
    const auto x = Configuration::from_index(s, 4);
    if (cycle_decipher(cycle_encipher(x, rules, Boundary::null), rules, Boundary::null) != x) {
      return fail("cycle cipher round trip at " + x.to_string());
    }
  }
  return pass("4 cycles x 4 states; cycle cipher inverts on all 16 states");
}

Outcome table_fidelity() {
  const std::pair<unsigned, const char*> rows[] = {
      {15, "00001111"}, {240, "11110000"}, {51, "00110011"}, {204, "11001100"}, {85, "01010101"}, {170, "10101010"},
  };
  for (auto [rule, outputs] : rows) {
    const auto table = make_rule(1, rule);
    for (int col = 0; col < 8; ++col) {
      if (table.at(static_cast<std::uint32_t>(7 - col)) != (outputs[col] == '1')) {
        return fail("row " + std::to_string(rule) + " column " + std::to_string(col));
      }
    }
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 128;
    const auto c = random_config(rng, n);
    auto left = [&](std::size_t i) { return c[(i + n - 1) % n]; };
    auto right = [&](std::size_t i) { return c[(i + 1) % n]; };
    const std::pair<unsigned, std::function<bool(std::size_t)>> forms[] = {
        {15, [&](std::size_t i) { return !left(i); }}, {240, [&](std::size_t i) { return left(i); }},
        {51, [&](std::size_t i) { return !c[i]; }},    {204, [&](std::size_t i) { return c[i]; }},
        {85, [&](std::size_t i) { return !right(i); }}, {170, [&](std::size_t i) { return right(i); }},
    };
    for (const auto& [rule, form] : forms) {
      const auto next = step(c, uniform(rule), Boundary::cyclic);
      for (std::size_t i = 0; i < n; ++i) {
        if (next[i] != form(i)) return fail("rule " + std::to_string(rule) + " closed form, trial " + std::to_string(trial));
      }
    }
  }
  return pass("6 table rows; 6 closed forms x 10^4 configurations");
}

Outcome second_order_reversibility() {
  std::mt19937_64 rng(77);
  const std::size_t lengths[] = {8, 64, 128};
  for (int trial = 0; trial < 1000; ++trial) {
    const int radius = 1 + static_cast<int>(rng() % 3);
    RuleNumber number = (static_cast<RuleNumber>(rng()) << 64) | rng();
    number &= max_rule_number(radius);
    const auto rule = make_rule(radius, number);
    const std::size_t n = lengths[rng() % 3];
    const std::size_t t = 1 + rng() % 64;
    const Boundary boundary = (rng() & 1) ? Boundary::cyclic : Boundary::null;
    const SecondOrderState start(random_config(rng, n), random_config(rng, n));
    const auto forward = so_iterate_forward(start, rule, boundary, t);
    if (so_iterate_backward(forward, rule, boundary, t) != start) {
      return fail("trial " + std::to_string(trial) + ": radius " + std::to_string(radius) + ", length " +
                  std::to_string(n) + ", T " + std::to_string(t));
    }
  }
  return pass("10^3 random tuples");
}

Outcome file_round_trip(const std::filesystem::path& dir) {
  std::mt19937_64 rng(6);
  const SecretKey key = random_key(rng);
  const CipherParams params{};
  SeededRidSource rids(99);
  for (std::size_t size : {std::size_t{0}, std::size_t{1}, std::size_t{15}, std::size_t{16}, std::size_t{17},
                           std::size_t{1000000}}) {
    std::vector<std::uint8_t> data(size);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    const auto pt_path = dir / "plain.bin";
    const auto ct_path = dir / "cipher.rpc";
    write_file(pt_path, data);
    const auto plaintext = read_file(pt_path);
    const auto records = encrypt_stream(plaintext, key, params, rids, 0);
    write_file(ct_path, write_container({params, plaintext.size()}, records));
    const auto container = read_container(read_file(ct_path));
    const auto recovered = decrypt_stream(container.records, key, container.header.params, 0);
    if (recovered != data) return fail("file round trip at " + std::to_string(size) + " bytes");
  }
  return pass();
}

Outcome cipher_round_trip() {
  std::mt19937_64 rng(5);
  for (const CipherParams params : {CipherParams{10, 32}, CipherParams{1, 2}}) {
    for (int trial = 0; trial < 10000; ++trial) {
      const SecretKey key = random_key(rng);
      const Block pt = random_block(rng);
      const Block rid = random_block(rng);
      if (decrypt_block(encrypt_block(pt, key, params, rid), key, params) != pt) {
        return fail("block round trip at (" + std::to_string(params.rounds) + ", " +
                    std::to_string(params.caf_steps) + "), trial " + std::to_string(trial));
      }
    }
  }
  const auto dir = std::filesystem::temp_directory_path() / ("rpca_acceptance_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  auto files = file_round_trip(dir);
  std::filesystem::remove_all(dir);
  if (files.verdict != Verdict::pass) return files;
  return pass("2 x 10^4 blocks; files of 0, 1, 15, 16, 17, 10^6 bytes");
}

Outcome stage_invertibility() {
  std::mt19937_64 rng(8);
  using Stage = std::function<Block(const Block&, const Block&, Direction)>;
  const std::pair<const char*, Stage> stages[] = {
      {"byte_substitution", byte_substitution},
      {"row_shift", row_shift},
      {"column_mix", column_mix},
      {"add_round_key", [](const Block& s, const Block& m, Direction) { return add_round_key(s, m); }},
  };
  for (const auto& [name, stage] : stages) {
    for (int trial = 0; trial < 10000; ++trial) {
      const Block s = random_block(rng);
      const Block m = random_block(rng);
      if (stage(stage(s, m, Direction::forward), m, Direction::inverse) != s ||
          stage(stage(s, m, Direction::inverse), m, Direction::forward) != s) {
        return fail(std::string(name) + " trial " + std::to_string(trial));
      }
    }
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const SecretKey key = random_key(rng);
    const Block f = random_block(rng);
    if (mask_final_data(mask_final_data(f, key), key) != f) return fail("mask_final_data trial " + std::to_string(trial));
  }
  return pass("5 stages x 10^4 cases");
}

Outcome substituted_claims() {
  std::mt19937_64 rng(10);
  const SecretKey key = random_key(rng);
  const auto report = avalanche(key, CipherParams{}, 1000, FlipTarget::plaintext, 1);
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.4f", report.mean_flip_fraction);
  if (report.mean_flip_fraction < 0.4 || report.mean_flip_fraction > 0.6) {
    return fail(std::string("avalanche mean ") + mean + " outside [0.4, 0.6]");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  std::string scaling = "scaling skipped (" + std::to_string(hw) + " hardware threads)";
  if (hw >= 4) {
    const auto bench = throughput_bench(key, CipherParams{}, 4, 0);
    const auto ok = parallel_scaling_ok(bench, hw);
    char ratio[64];
    std::snprintf(ratio, sizeof ratio, "%.2fx", bench.encrypt_mbps_multi / bench.encrypt_mbps_single);
    if (!bench.round_trip_ok) return fail("throughput round trip failed");
    if (ok && !*ok) return fail(std::string("multi-worker speedup ") + ratio + " < 1.2x");
    scaling = std::string("speedup ") + ratio;
  }
  return pass(std::string("avalanche mean ") + mean + "; " + scaling);
}

Outcome pca_injectivity_finding() {
  if (is_reversible_global(vector_of({204, 204, 240, 170}), Boundary::null, 4)) {
    return fail("<204,204,240,170> reported injective under null boundary");
  }
  return pass("<204,204,240,170> on 4 null-boundary cells is not injective");
}

Outcome container_checks() {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const CipherParams params{static_cast<unsigned>(1 + rng() % 64), static_cast<unsigned>(2 + rng() % 1023)};
    const std::uint64_t length = rng() % 300;
    std::vector<CipherRecord> records(length / 16 + 1);
    for (auto& r : records) {
      r.ciphertext = random_block(rng);
      r.encrypted_final_data = random_block(rng);
      r.params = params;
    }
    const auto bytes = write_container({params, length}, records);
    const auto back = read_container(bytes);
    if (back.header.params != params || back.header.plaintext_length != length || back.records != records) {
      return fail("round trip trial " + std::to_string(trial));
    }
    if (write_container(back.header, back.records) != bytes) return fail("rewrite not bit-exact");

    auto rejects = [&](std::vector<std::uint8_t> corrupt) {
      try {
        read_container(corrupt);
      } catch (const FormatError&) {
        return true;
      }
      return false;
    };
    const std::size_t cut = rng() % bytes.size();
    if (!rejects({bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(cut)})) {
      return fail("accepted truncation to " + std::to_string(cut) + " bytes");
    }
    auto bad_magic = bytes;
    bad_magic[rng() % 4] ^= static_cast<std::uint8_t>(1 + rng() % 255);
    if (!rejects(bad_magic)) return fail("accepted bad magic");
    auto bad_rounds = bytes;
    bad_rounds[5] = (rng() & 1) ? 0 : static_cast<std::uint8_t>(65 + rng() % 191);
    if (!rejects(bad_rounds)) return fail("accepted rounds " + std::to_string(bad_rounds[5]));
    auto bad_steps = bytes;
    const unsigned steps = (rng() & 1) ? static_cast<unsigned>(rng() % 2) : static_cast<unsigned>(1025 + rng() % 64511);
    bad_steps[6] = static_cast<std::uint8_t>(steps >> 8);
    bad_steps[7] = static_cast<std::uint8_t>(steps);
    if (!rejects(bad_steps)) return fail("accepted caf steps " + std::to_string(steps));
  }
  return pass("200 random payloads; truncation, magic and parameter rejections");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "reversible-rule census", 1.0, census},
      {2, "complement formula", 1.0, complement_formula},
      {3, "cycle structure of <51,51,195,153>", 1.0, cycle_claim},
      {4, "rule table fidelity", 0.0, table_fidelity},
      {5, "second-order reversibility", 10.0, second_order_reversibility},
      {6, "cipher round trip", 60.0, cipher_round_trip},
      {7, "stage invertibility", 0.0, stage_invertibility},
      {8, "avalanche and parallel scaling", 0.0, substituted_claims},
      {9, "PCA injectivity finding", 1.0, pca_injectivity_finding},
      {10, "container format", 0.0, container_checks},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.verdict == Verdict::pass && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      char msg[96];
      std::snprintf(msg, sizeof msg, "took %.2fs, limit %.0fs", seconds, c.limit_seconds);
      outcome = fail(msg);
    }
    const char* tag = outcome.verdict == Verdict::pass ? "PASS" : "FAIL";
    std::printf("[%s] %2d %-36s %7.2fs  %s\n", tag, c.id, c.name, seconds, outcome.detail.c_str());
    std::fflush(stdout);
    if (outcome.verdict == Verdict::fail) ++failures;
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
