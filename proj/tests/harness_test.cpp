#include <gtest/gtest.h>

#include <sstream>

#include "rs3127/harness.hpp"

namespace rs3127 {
namespace {

ChannelConfig config(double ber, std::uint64_t frames, std::uint64_t seed = 7) {
  ChannelConfig c;
  c.ber = ber;
  c.frames = frames;
  c.seed = seed;
  return c;
}

TEST(ChannelConfig, Validation) {
  EXPECT_NO_THROW(config(0.5, 1).validate());
  EXPECT_THROW(config(-0.1, 1).validate(), std::invalid_argument);
  EXPECT_THROW(config(1.5, 1).validate(), std::invalid_argument);
  ChannelConfig c = config(0, 1);
  c.burst_len = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(ApplyChannel, Extremes) {
  Rng rng = derive_rng(1, 0, 0);
  const Frame f = build_frame(random_payload(rng));
  EXPECT_EQ(apply_channel(f, config(0, 1), rng), f);
  EXPECT_EQ(apply_channel(f, config(1, 1), rng), ~f);
}

TEST(ApplyChannel, ReplayIsDeterministic) {
  ChannelConfig c = config(0.02, 1);
  c.burst_len = 12;
  c.burst_rate = 1.5;
  Rng a = derive_rng(99, 5, 2);
  Rng b = derive_rng(99, 5, 2);
  const Frame f;
  EXPECT_EQ(apply_channel(f, c, a), apply_channel(f, c, b));
}

TEST(ApplyChannel, FlipRateMatchesBer) {
  Rng rng = derive_rng(3, 0, 0);
  const Frame f;
  std::size_t flips = 0;
  const int frames = 20000;
  for (int t = 0; t < frames; ++t) flips += apply_channel(f, config(0.01, 1), rng).count();
  const double rate = static_cast<double>(flips) / (320.0 * frames);
  // 6.4e6 trials: standard error ~4e-5.
  EXPECT_NEAR(rate, 0.01, 3e-4);
}

TEST(ApplyChannel, BurstsAreContiguous) {
  ChannelConfig c = config(0, 1);
  c.burst_len = 17;
  c.burst_rate = 0.5;
  Rng rng = derive_rng(4, 0, 0);
  int seen = 0;
  for (int t = 0; t < 200; ++t) {
    const Frame hit = apply_channel(Frame{}, c, rng);
    if (hit.count() != 17) continue;  // skip zero or overlapping bursts
    ++seen;
    int first = 0;
    while (!hit.test(static_cast<std::size_t>(first))) ++first;
    for (int k = 0; k < 17; ++k) ASSERT_TRUE(hit.test(static_cast<std::size_t>(first + k)));
  }
  EXPECT_GT(seen, 0);
}

TEST(RunTrial, CleanChannel) {
  const TrialStats s = run_trial(config(0, 100));
  EXPECT_EQ(s.frames_total, 100U);
  EXPECT_EQ(s.codewords_total, 200U);
  EXPECT_EQ(s.frames_err_pre, 0U);
  EXPECT_EQ(s.frames_err_post, 0U);
  EXPECT_EQ(s.bit_err_pre, 0U);
  EXPECT_EQ(s.bit_err_post, 0U);
  EXPECT_EQ(s.header_errors, 0U);
}

TEST(RunTrial, AccountingIdentities) {
  for (double ber : {1e-3, 5e-3, 2e-2}) {
    const TrialStats s = run_trial(config(ber, 3000));
    EXPECT_EQ(s.frames_err_pre, s.frames_recovered + s.frames_err_post) << ber;
    EXPECT_LE(s.miscorrections, s.frames_err_post);
    EXPECT_LE(s.frames_err_pre, s.frames_total);
    EXPECT_LE(s.detected_uncorrectable, s.frames_err_pre);
    EXPECT_LE(s.codewords_err_post, s.codewords_err_pre);
    EXPECT_LE(s.codewords_err_pre, s.codewords_total);
  }
}

TEST(RunTrial, CorrectionHelps) {
  const TrialStats s = run_trial(config(1e-3, 5000));
  EXPECT_GT(s.frames_err_pre, 0U);
  EXPECT_GT(s.frames_recovered, 0U);
  EXPECT_LT(s.frames_err_post, s.frames_err_pre);
  EXPECT_LT(s.bit_err_post, s.bit_err_pre);
}

TEST(RunTrial, IndependentOfJobCount) {
  ChannelConfig c = config(4e-3, 1500, 1234);
  c.burst_len = 9;
  c.burst_rate = 0.2;
  const TrialStats one = run_trial(c, 1);
  EXPECT_EQ(run_trial(c, 3), one);
  EXPECT_EQ(run_trial(c, 8), one);
}

TEST(RunSweep, MonotoneInBer) {
  std::vector<ChannelConfig> cfgs;
  for (double ber : {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}) cfgs.push_back(config(ber, 20000, 5));
  const auto stats = run_sweep(cfgs, 2);
  ASSERT_EQ(stats.size(), cfgs.size());
  for (std::size_t i = 1; i < stats.size(); ++i) EXPECT_GE(stats[i].frames_err_pre, stats[i - 1].frames_err_pre);
}

TEST(ForcedErrors, WeightBehaviour) {
  const ForcedErrorStats two = run_forced_symbol_errors(2, 2000, 1);
  EXPECT_EQ(two.recovered, 2000U);
  const ForcedErrorStats three = run_forced_symbol_errors(3, 2000, 1);
  EXPECT_EQ(three.recovered, 0U);
  EXPECT_GT(three.miscorrected, 0U);
  EXPECT_GT(three.detected, 0U);
  EXPECT_EQ(three.miscorrected + three.detected, three.trials);
  EXPECT_THROW(run_forced_symbol_errors(32, 1, 1), std::invalid_argument);
}

TEST(EmitStats, RecordsAndCsv) {
  std::vector<ChannelConfig> cfgs{config(0, 10), config(0.01, 10)};
  const auto stats = run_sweep(cfgs);
  const std::string text = emit_stats(cfgs, stats);
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_TRUE(line.starts_with("ber="));
    EXPECT_NE(line.find(" frames_total=10 "), std::string::npos);
  }
  EXPECT_EQ(lines, 2);
  EXPECT_EQ(emit_stats(cfgs, run_sweep(cfgs)), text);

  const std::string csv = emit_stats(cfgs, stats, true);
  EXPECT_TRUE(csv.starts_with(csv_header() + "\n"));
  EXPECT_TRUE(csv_header().starts_with("ber,burst_len,burst_rate,seed,frames,frames_total,"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_THROW(emit_stats(cfgs, {}), std::invalid_argument);
}

}  // namespace
}  // namespace rs3127
