#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rs3127/framing.hpp"

namespace rs3127 {

/// Channel model for one trial run. Throws std::invalid_argument from
/// validate() when a probability or count is out of range.
struct ChannelConfig {
  double ber = 0.0;          // independent bit-flip probability
  int burst_len = 0;         // bits flipped per burst
  double burst_rate = 0.0;   // mean bursts per frame (Poisson)
  std::uint64_t seed = 1;
  std::uint64_t frames = 0;

  void validate() const;
};

/// Frame-level and codeword-level counters. "pre" counts channel damage in the
/// 310-bit codeword region (the header is excluded); "post" counts wrong
/// user bits after decoding.
struct TrialStats {
  std::uint64_t frames_total = 0;
  std::uint64_t frames_err_pre = 0;
  std::uint64_t frames_err_post = 0;
  std::uint64_t frames_recovered = 0;
  std::uint64_t miscorrections = 0;         // frames with a codeword marked ok/corrected but wrong
  std::uint64_t detected_uncorrectable = 0; // frames with a codeword flagged uncorrectable
  std::uint64_t header_errors = 0;
  std::uint64_t bit_err_pre = 0;
  std::uint64_t bit_err_post = 0;
  std::uint64_t codewords_total = 0;
  std::uint64_t codewords_err_pre = 0;
  std::uint64_t codewords_err_post = 0;  // user bits wrong or flagged uncorrectable

  TrialStats& operator+=(const TrialStats& o) noexcept;
  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

using Rng = std::mt19937_64;

/// Independent generator for (seed, frame index, stream), so results do not
/// depend on the order in which frames are processed.
Rng derive_rng(std::uint64_t seed, std::uint64_t frame_index, std::uint64_t stream);

Payload random_payload(Rng& rng);

/// Flips each bit with probability cfg.ber, then applies Poisson(cfg.burst_rate)
/// bursts of cfg.burst_len consecutive bits at uniform offsets. The header is
/// exposed like any other bit.
Frame apply_channel(const Frame& frame, const ChannelConfig& cfg, Rng& rng);

/// Runs one frame through build_frame, the channel, and unframe.
TrialStats run_frame(const ChannelConfig& cfg, std::uint64_t frame_index);

TrialStats run_trial(const ChannelConfig& cfg, unsigned jobs = 1);
std::vector<TrialStats> run_sweep(const std::vector<ChannelConfig>& cfgs, unsigned jobs = 1);

/// Outcome of decoding codewords hit by exactly `weight` symbol errors.
struct ForcedErrorStats {
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;
  std::uint64_t miscorrected = 0;  // status ok/corrected, wrong message
  std::uint64_t detected = 0;      // status uncorrectable
};

ForcedErrorStats run_forced_symbol_errors(int weight, std::uint64_t trials, std::uint64_t seed);

/// One line of space-separated key=value pairs, config fields first.
std::string format_record(const ChannelConfig& cfg, const TrialStats& stats);
std::string csv_header();
std::string format_csv_row(const ChannelConfig& cfg, const TrialStats& stats);

/// One record per config, newline terminated; header row first when csv.
std::string emit_stats(const std::vector<ChannelConfig>& cfgs, const std::vector<TrialStats>& stats,
                       bool csv = false);

}  // namespace rs3127
