#include <benchmark/benchmark.h>

#include <random>

#include "rpca/block_cipher.hpp"
#include "rpca/ca_engine.hpp"
#include "rpca/random.hpp"
#include "rpca/second_order.hpp"

using namespace rpca;

namespace {

SecretKey bench_key() {
  SecretKey::Raw raw{};
  std::mt19937_64 rng(42);
  for (auto& b : raw) b = static_cast<std::uint8_t>(rng());
  return SecretKey(raw);
}

Configuration random_config(std::size_t cells, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Configuration c(cells);
  for (std::size_t i = 0; i < cells; ++i) c.set(i, rng() & 1);
  return c;
}

void BM_Step(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  const auto rules = RuleVector::uniform(make_rule(1, 30));
  auto c = random_config(cells, 1);
  for (auto _ : state) {
    c = step(c, rules, Boundary::cyclic);
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cells));
}
BENCHMARK(BM_Step)->Arg(64)->Arg(128)->Arg(1024);

void BM_SoStep128(benchmark::State& state) {
  const auto rule = caf_rule(bench_key());
  SecondOrderStepper stepper(rule, Boundary::cyclic);
  auto prev = random_config(128, 2);
  auto curr = random_config(128, 3);
  for (auto _ : state) {
    stepper.advance(prev, curr);
    benchmark::DoNotOptimize(curr);
  }
}
BENCHMARK(BM_SoStep128);

void BM_EncryptBlock(benchmark::State& state) {
  const BlockCipher cipher(bench_key(), CipherParams{});
  Block pt{};
  Block rid{};
  rid[0] = 1;
  for (auto _ : state) {
    auto record = cipher.encrypt(pt, rid);
    benchmark::DoNotOptimize(record);
    pt[0]++;
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(kBlockBytes));
}
BENCHMARK(BM_EncryptBlock);

void BM_EncryptStream(benchmark::State& state) {
  const auto key = bench_key();
  const std::vector<std::uint8_t> data(64 * 1024, 0x5A);
  const auto workers = static_cast<std::size_t>(state.range(0));
  SeededRidSource rids(7);
  for (auto _ : state) {
    auto records = encrypt_stream(data, key, CipherParams{}, rids, workers);
    benchmark::DoNotOptimize(records);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_EncryptStream)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
