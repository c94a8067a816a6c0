#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <thread>

#include "rpca/analysis.hpp"
#include "rpca/block_cipher.hpp"
#include "rpca/ca_engine.hpp"
#include "rpca/container.hpp"
#include "rpca/errors.hpp"
#include "rpca/random.hpp"

namespace rpca::cli {

namespace {

constexpr const char* kResearchWarning =
    "warning: this is a research cellular-automaton cipher, NOT FOR PRODUCTION use\n";

std::uint64_t parse_seed(const std::string& hex) {
  if (hex.empty() || hex.size() > 16) {
    throw std::invalid_argument("--seed takes 1 to 16 hex digits");
  }
  const auto padded = std::string(16 - hex.size(), '0') + hex;
  std::uint64_t seed = 0;
  for (auto b : from_hex(padded)) seed = (seed << 8) | b;
  return seed;
}

SecretKey key_from_seed(std::uint64_t seed) {
  SeededRidSource source(seed);
  const Block a = source.draw();
  const Block b = source.draw();
  SecretKey::Raw raw;
  std::copy(a.begin(), a.end(), raw.begin());
  std::copy(b.begin(), b.end(), raw.begin() + 16);
  return SecretKey(raw);
}

SecretKey load_key(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::exists(arg, ec) && arg.size() == 2 * kKeyBytes) {
    return parse_key_hex(arg);
  }
  return read_key_file(arg);
}

struct Options {
  std::string out_path;
  std::string key_path;
  std::string in_path;
  unsigned rounds = CipherParams{}.rounds;
  unsigned steps = CipherParams{}.caf_steps;
  std::string seed;
  std::size_t workers = 0;

  int radius = 1;
  std::string sizes = "4,5,6,7,8";
  std::string rule_number;

  std::string rule_vector;
  std::size_t cells = 0;
  std::string boundary;

  std::size_t trials = 1000;
  std::string flip = "plaintext";
  bool key_value = false;
  std::size_t megabytes = 1;
};

int cmd_keygen(const Options& o, std::ostream& out) {
  SecretKey::Raw raw;
  fill_system_random(raw);
  write_key_file(o.out_path, SecretKey(raw));
  out << "wrote 256-bit key to " << o.out_path << '\n';
  return kExitOk;
}

int cmd_encrypt(const Options& o, std::ostream& err) {
  err << kResearchWarning;
  const CipherParams params{o.rounds, o.steps};
  params.validate();
  const SecretKey key = load_key(o.key_path);
  const auto plaintext = read_file(o.in_path);

  std::unique_ptr<RidSource> rids;
  if (o.seed.empty()) {
    rids = std::make_unique<SystemRidSource>();
  } else {
    rids = std::make_unique<SeededRidSource>(parse_seed(o.seed));
  }
  const auto records = encrypt_stream(plaintext, key, params, *rids, o.workers);
  write_file(o.out_path, write_container({params, plaintext.size()}, records));
  return kExitOk;
}

int cmd_decrypt(const Options& o) {
  const SecretKey key = load_key(o.key_path);
  const auto container = read_container(read_file(o.in_path));
  const auto plaintext = decrypt_stream(container.records, key, container.header.params, o.workers);
  if (plaintext.size() != container.header.plaintext_length) {
    throw ValidationError("decrypted length " + std::to_string(plaintext.size()) +
                          " does not match the header's plaintext length");
  }
  write_file(o.out_path, plaintext);
  return kExitOk;
}

int cmd_list_reversible(const Options& o, std::ostream& out) {
  std::vector<std::size_t> sizes;
  std::stringstream csv(o.sizes);
  for (std::string item; std::getline(csv, item, ',');) {
    sizes.push_back(std::stoul(item));
  }
  const auto rules = enumerate_reversible_elementary(o.radius, sizes);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out << (i ? " " : "") << rules[i];
  }
  out << '\n';
  return kExitOk;
}

int cmd_complement(const Options& o, std::ostream& out) {
  out << to_string(complement_rule(make_rule(o.radius, parse_rule_number(o.rule_number))).number()) << '\n';
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto rule = make_rule(o.radius, parse_rule_number(o.rule_number));
  const auto width = rule.width();
  for (std::uint32_t p = static_cast<std::uint32_t>(rule.size()); p-- > 0;) {
    std::string pattern(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
      if ((p >> (width - 1 - k)) & 1u) pattern[k] = '1';
    }
    out << pattern << " -> " << rule.at(p) << '\n';
  }
  return kExitOk;
}

int cmd_cycles(const Options& o, std::ostream& out) {
  auto rules = RuleVector::parse(o.rule_vector, o.radius);
  if (rules.size() == 1) {
    rules = RuleVector::uniform(rules.rule_for(0));
  }
  out << format_cycle_report(cycle_structure(rules, parse_boundary(o.boundary), o.cells));
  return kExitOk;
}

int cmd_avalanche(const Options& o, std::ostream& out) {
  const CipherParams params{o.rounds, o.steps};
  params.validate();
  const std::uint64_t seed = o.seed.empty() ? 1 : parse_seed(o.seed);
  const SecretKey key = o.key_path.empty() ? key_from_seed(seed) : load_key(o.key_path);
  out << format_report(avalanche(key, params, o.trials, parse_flip_target(o.flip), seed), o.key_value);
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const CipherParams params{o.rounds, o.steps};
  params.validate();
  const SecretKey key = o.key_path.empty() ? key_from_seed(1) : load_key(o.key_path);
  const auto report = throughput_bench(key, params, o.megabytes, o.workers);
  out << format_report(report, o.key_value);
  const unsigned hw = std::thread::hardware_concurrency();
  const auto scaling = parallel_scaling_ok(report, hw);
  if (o.key_value) {
    out << "scaling_ok=" << (scaling ? (*scaling ? "1" : "0") : "skipped") << '\n';
  } else {
    out << "  parallel scaling >= 1.2x: "
        << (scaling ? (*scaling ? "yes" : "no") : "skipped (" + std::to_string(hw) + " hardware threads)") << '\n';
  }
  return report.round_trip_ok ? kExitOk : kExitData;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible programmable cellular automata toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* keygen = app.add_subcommand("keygen", "Write 32 random key bytes");
  keygen->add_option("--out", o.out_path, "Key file to create")->required();

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file into an RPC1 container");
  encrypt->add_option("--key", o.key_path, "Key file, or the key as 64 hex chars")->required();
  encrypt->add_option("--in", o.in_path, "Plaintext file")->required();
  encrypt->add_option("--out", o.out_path, "Container to write")->required();
  encrypt->add_option("--rounds", o.rounds, "Round count (1..64)")->capture_default_str();
  encrypt->add_option("--steps", o.steps, "CAF second-order steps (2..1024)")->capture_default_str();
  encrypt->add_option("--seed", o.seed, "Deterministic rid source seed (hex; testing only)");
  encrypt->add_option("--workers", o.workers, "Worker threads (0 = all cores)")->capture_default_str();

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt an RPC1 container");
  decrypt->add_option("--key", o.key_path, "Key file")->required();
  decrypt->add_option("--in", o.in_path, "Container file")->required();
  decrypt->add_option("--out", o.out_path, "Plaintext to write")->required();
  decrypt->add_option("--workers", o.workers, "Worker threads (0 = all cores)")->capture_default_str();

  auto* rules = app.add_subcommand("rules", "Rule exploration");
  rules->require_subcommand(1);
  auto* list = rules->add_subcommand("list-reversible", "Radius-1 rules injective on every listed ring size");
  list->add_option("--radius", o.radius, "Rule radius (only 1 is supported)")->required();
  list->add_option("--sizes", o.sizes, "Comma-separated ring sizes")->capture_default_str();
  auto* complement = rules->add_subcommand("complement", "Print the complement rule number");
  complement->add_option("number", o.rule_number, "Rule number")->required();
  complement->add_option("--radius", o.radius, "Rule radius")->capture_default_str();
  auto* table = rules->add_subcommand("table", "Print a rule's lookup table");
  table->add_option("number", o.rule_number, "Rule number")->required();
  table->add_option("--radius", o.radius, "Rule radius")->required();

  auto* cycles = app.add_subcommand("cycles", "Print the state-transition cycles of a small automaton");
  cycles->add_option("--rule-vector", o.rule_vector, "Comma-separated rule numbers (one = uniform)")->required();
  cycles->add_option("--cells", o.cells, "Cell count (1..20)")->required();
  cycles->add_option("--boundary", o.boundary, "null or cyclic")->required()->check(CLI::IsMember({"null", "cyclic"}));
  cycles->add_option("--radius", o.radius, "Rule radius")->capture_default_str();

  auto* aval = app.add_subcommand("avalanche", "Measure ciphertext avalanche");
  aval->add_option("--trials", o.trials, "Trial count")->capture_default_str();
  aval->add_option("--flip", o.flip, "plaintext, key or none")
      ->capture_default_str()
      ->check(CLI::IsMember({"plaintext", "key", "none"}));
  aval->add_option("--rounds", o.rounds, "Round count")->capture_default_str();
  aval->add_option("--steps", o.steps, "CAF steps")->capture_default_str();
  aval->add_option("--key", o.key_path, "Key file (default: derived from the seed)");
  aval->add_option("--seed", o.seed, "Seed (hex, default 1)");
  aval->add_flag("--kv", o.key_value, "Emit key=value lines");

  auto* bench = app.add_subcommand("bench", "Throughput benchmark");
  bench->add_option("--mb", o.megabytes, "MiB to process")->capture_default_str();
  bench->add_option("--workers", o.workers, "Worker threads (0 = all cores)")->capture_default_str();
  bench->add_option("--rounds", o.rounds, "Round count")->capture_default_str();
  bench->add_option("--steps", o.steps, "CAF steps")->capture_default_str();
  bench->add_option("--key", o.key_path, "Key file");
  bench->add_flag("--kv", o.key_value, "Emit key=value lines");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*keygen) return cmd_keygen(o, out);
    if (*encrypt) return cmd_encrypt(o, err);
    if (*decrypt) return cmd_decrypt(o);
    if (*list) return cmd_list_reversible(o, out);
    if (*complement) return cmd_complement(o, out);
    if (*table) return cmd_table(o, out);
    if (*cycles) return cmd_cycles(o, out);
    if (*aval) return cmd_avalanche(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace rpca::cli
