#include <benchmark/benchmark.h>

#include "gpw/campaign.hpp"
#include "gpw/explore.hpp"

namespace {

const gpw::EnumSpec kEnum{4, 1, gpw::OrderMode::AllPartialOrders};
const gpw::EnumSpec kCampaign{3, 2, gpw::OrderMode::AllPartialOrders};

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gpw::enumerate_serial(kEnum).size());
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gpw::enumerate(kEnum, jobs).size());
}
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CampaignSerial(benchmark::State& state) {
  const std::vector<gpw::EnumSpec> specs{kCampaign};
  for (auto _ : state) benchmark::DoNotOptimize(gpw::run_campaign_serial(specs, gpw::all_theorem_ids()).structures);
}
BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);

void BM_CampaignParallel(benchmark::State& state) {
  const std::vector<gpw::EnumSpec> specs{kCampaign};
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gpw::run_campaign(specs, gpw::all_theorem_ids(), jobs).structures);
}
BENCHMARK(BM_CampaignParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
