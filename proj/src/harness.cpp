#include "rs3127/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <utility>

namespace rs3127 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum Stream : std::uint64_t { kPayloadStream = 1, kChannelStream = 2, kForcedStream = 3 };

struct Masks {
  Frame codeword[2];
  Payload half[2];
};

const Masks& masks() {
  static const Masks m = [] {
    Masks out;
    for (int p = 0; p < kInterleavedBits; ++p) {
      const int slot = p / kSymbolBits;
      out.codeword[slot % 2].set(static_cast<std::size_t>(kHeaderBits + p));
    }
    for (int n = 0; n < kPayloadBits; ++n) out.half[n / kInfoBits].set(static_cast<std::size_t>(n));
    return out;
  }();
  return m;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Field names and values in emission order.
std::vector<std::pair<std::string, std::string>> fields(const ChannelConfig& c, const TrialStats& s) {
  const auto u = [](std::uint64_t v) { return std::to_string(v); };
  return {
      {"ber", fmt_double(c.ber)},
      {"burst_len", std::to_string(c.burst_len)},
      {"burst_rate", fmt_double(c.burst_rate)},
      {"seed", u(c.seed)},
      {"frames", u(c.frames)},
      {"frames_total", u(s.frames_total)},
      {"frames_err_pre", u(s.frames_err_pre)},
      {"frames_err_post", u(s.frames_err_post)},
      {"frames_recovered", u(s.frames_recovered)},
      {"miscorrections", u(s.miscorrections)},
      {"detected_uncorrectable", u(s.detected_uncorrectable)},
      {"header_errors", u(s.header_errors)},
      {"bit_err_pre", u(s.bit_err_pre)},
      {"bit_err_post", u(s.bit_err_post)},
      {"codewords_total", u(s.codewords_total)},
      {"codewords_err_pre", u(s.codewords_err_pre)},
      {"codewords_err_post", u(s.codewords_err_post)},
  };
}

}  // namespace

void ChannelConfig::validate() const {
  if (!(ber >= 0.0 && ber <= 1.0)) throw std::invalid_argument("ber must lie in [0, 1]");
  if (burst_len < 0) throw std::invalid_argument("burst_len must be non-negative");
  if (!(burst_rate >= 0.0)) throw std::invalid_argument("burst_rate must be non-negative");
}

TrialStats& TrialStats::operator+=(const TrialStats& o) noexcept {
  frames_total += o.frames_total;
  frames_err_pre += o.frames_err_pre;
  frames_err_post += o.frames_err_post;
  frames_recovered += o.frames_recovered;
  miscorrections += o.miscorrections;
  detected_uncorrectable += o.detected_uncorrectable;
  header_errors += o.header_errors;
  bit_err_pre += o.bit_err_pre;
  bit_err_post += o.bit_err_post;
  codewords_total += o.codewords_total;
  codewords_err_pre += o.codewords_err_pre;
  codewords_err_post += o.codewords_err_post;
  return *this;
}

Rng derive_rng(std::uint64_t seed, std::uint64_t frame_index, std::uint64_t stream) {
  const std::uint64_t key = splitmix64(splitmix64(splitmix64(seed) ^ frame_index) ^ stream);
  std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  return Rng(seq);
}

Payload random_payload(Rng& rng) {
  Payload p;
  for (int n = 0; n < kPayloadBits; n += 64) {
    const std::uint64_t word = rng();
    for (int b = 0; b < 64 && n + b < kPayloadBits; ++b) p.set(static_cast<std::size_t>(n + b), (word >> b) & 1U);
  }
  return p;
}

Frame apply_channel(const Frame& frame, const ChannelConfig& cfg, Rng& rng) {
  Frame out = frame;
  if (cfg.ber >= 1.0) {
    out.flip();
  } else if (cfg.ber > 0.0) {
    // Skip directly to the next flipped bit.
    std::geometric_distribution<long long> gap(cfg.ber);
    for (long long pos = gap(rng); pos < kFrameBits; pos += 1 + gap(rng)) out.flip(static_cast<std::size_t>(pos));
  }

  if (cfg.burst_len > 0 && cfg.burst_rate > 0.0) {
    std::poisson_distribution<int> count(cfg.burst_rate);
    const int len = std::min(cfg.burst_len, kFrameBits);
    std::uniform_int_distribution<int> offset(0, kFrameBits - len);
    for (int n = count(rng); n > 0; --n) {
      const int start = offset(rng);
      for (int k = 0; k < len; ++k) out.flip(static_cast<std::size_t>(start + k));
    }
  }
  return out;
}

TrialStats run_frame(const ChannelConfig& cfg, std::uint64_t frame_index) {
  Rng payload_rng = derive_rng(cfg.seed, frame_index, kPayloadStream);
  Rng channel_rng = derive_rng(cfg.seed, frame_index, kChannelStream);

  const Payload info = random_payload(payload_rng);
  const Frame sent = build_frame(info);
  const Frame received = apply_channel(sent, cfg, channel_rng);
  const UnframeResult result = unframe(received);

  const Masks& m = masks();
  const Frame damage = sent ^ received;
  const Payload wrong = info ^ result.info;

  TrialStats s;
  s.frames_total = 1;
  s.codewords_total = 2;
  s.header_errors = result.header_ok ? 0 : 1;
  s.bit_err_post = wrong.count();

  bool pre = false;
  bool post = false;
  bool miscorrected = false;
  bool detected = false;
  for (int w = 0; w < 2; ++w) {
    const Frame hit = damage & m.codeword[w];
    const bool cw_pre = hit.any();
    const bool cw_post = (wrong & m.half[w]).any();
    const bool flagged = result.codewords[w].status == DecodeStatus::uncorrectable;
    s.bit_err_pre += hit.count();
    s.codewords_err_pre += cw_pre ? 1 : 0;
    // A flagged codeword is a decoding failure even when the damage sat in parity only.
    s.codewords_err_post += (cw_post || flagged) ? 1 : 0;
    pre = pre || cw_pre;
    post = post || cw_post;
    miscorrected = miscorrected || (cw_post && !flagged);
    detected = detected || flagged;
  }
  s.frames_err_pre = pre ? 1 : 0;
  s.frames_err_post = post ? 1 : 0;
  s.frames_recovered = (pre && !post) ? 1 : 0;
  s.miscorrections = miscorrected ? 1 : 0;
  s.detected_uncorrectable = detected ? 1 : 0;
  return s;
}

TrialStats run_trial(const ChannelConfig& cfg, unsigned jobs) {
  cfg.validate();
  jobs = std::max(1U, jobs);
  const std::uint64_t n = cfg.frames;
  const std::uint64_t workers = std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(n, 1));

  std::vector<TrialStats> partial(workers);
  const auto work = [&](std::uint64_t w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    for (std::uint64_t f = begin; f < end; ++f) partial[w] += run_frame(cfg, f);
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  TrialStats total;
  for (const auto& p : partial) total += p;
  return total;
}

std::vector<TrialStats> run_sweep(const std::vector<ChannelConfig>& cfgs, unsigned jobs) {
  std::vector<TrialStats> out;
  out.reserve(cfgs.size());
  for (const auto& cfg : cfgs) out.push_back(run_trial(cfg, jobs));
  return out;
}

ForcedErrorStats run_forced_symbol_errors(int weight, std::uint64_t trials, std::uint64_t seed) {
  if (weight < 0 || weight > kCodeLength) throw std::invalid_argument("error weight must lie in [0, 31]");
  ForcedErrorStats out;
  std::array<int, kCodeLength> positions{};
  for (int j = 0; j < kCodeLength; ++j) positions[j] = j;

  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, t, kForcedStream);
    std::uniform_int_distribution<unsigned> symbol(0, kFieldSize - 1);
    std::uniform_int_distribution<unsigned> nonzero(1, kFieldSize - 1);

    Message msg{};
    for (auto& s : msg) s = GfElement(symbol(rng));
    const Codeword sent = encode_reference(msg);

    std::shuffle(positions.begin(), positions.end(), rng);
    Codeword received = sent;
    for (int e = 0; e < weight; ++e) received[positions[e]] += GfElement(nonzero(rng));

    const DecodeResult r = decode(received);
    ++out.trials;
    if (r.status == DecodeStatus::uncorrectable) {
      ++out.detected;
    } else if (r.message == msg) {
      ++out.recovered;
    } else {
      ++out.miscorrected;
    }
  }
  return out;
}

std::string format_record(const ChannelConfig& cfg, const TrialStats& stats) {
  std::string line;
  for (const auto& [key, value] : fields(cfg, stats)) {
    if (!line.empty()) line += ' ';
    line += key + '=' + value;
  }
  return line;
}

std::string csv_header() {
  std::string line;
  for (const auto& [key, value] : fields({}, {})) {
    if (!line.empty()) line += ',';
    line += key;
  }
  return line;
}

std::string format_csv_row(const ChannelConfig& cfg, const TrialStats& stats) {
  std::string line;
  for (const auto& [key, value] : fields(cfg, stats)) {
    if (!line.empty()) line += ',';
    line += value;
  }
  return line;
}

std::string emit_stats(const std::vector<ChannelConfig>& cfgs, const std::vector<TrialStats>& stats, bool csv) {
  if (cfgs.size() != stats.size()) throw std::invalid_argument("emit_stats: config/stats count mismatch");
  std::string out;
  if (csv) out += csv_header() + '\n';
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    out += (csv ? format_csv_row(cfgs[i], stats[i]) : format_record(cfgs[i], stats[i])) + '\n';
  }
  return out;
}

}  // namespace rs3127
