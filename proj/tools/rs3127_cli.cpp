// rs3127: command-line front end for the RS(31,27) codec, parity-circuit
// generator, and channel simulator.
//
// Byte payload convention for encode/decode: each frame carries up to 33 data
// bytes in payload bits 0..263 (MSB first) and the number of valid bytes in
// bits 264..269. Input is cut into 33-byte chunks; the last chunk may be
// short and is zero-padded. decode writes exactly the valid bytes back.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rs3127/framing.hpp"
#include "rs3127/harness.hpp"
#include "rs3127/parallel_encoder.hpp"
#include "rs3127/parallel_gen.hpp"

namespace {

using namespace rs3127;

constexpr int kBytesPerFrame = 33;
constexpr int kCountBits = kPayloadBits - 8 * kBytesPerFrame;  // 6

// Thrown for bad input data; maps to exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") {
      os_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot open " + path + " for writing");
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

ParityMatrix load_matrix(const std::string& path) {
  if (path.empty()) return parity_matrix();
  return parse_matrix(read_file(path));
}

Payload pack_chunk(const std::string& data, std::size_t begin, std::size_t count) {
  Payload p;
  for (std::size_t k = 0; k < count; ++k) {
    const auto byte = static_cast<unsigned char>(data[begin + k]);
    for (int b = 0; b < 8; ++b) p.set(8 * k + static_cast<std::size_t>(b), (byte >> (7 - b)) & 1U);
  }
  for (int b = 0; b < kCountBits; ++b) {
    p.set(static_cast<std::size_t>(8 * kBytesPerFrame + b), (count >> (kCountBits - 1 - b)) & 1U);
  }
  return p;
}

std::string unpack_chunk(const Payload& p) {
  std::size_t count = 0;
  for (int b = 0; b < kCountBits; ++b) count = (count << 1) | p.test(static_cast<std::size_t>(8 * kBytesPerFrame + b));
  count = std::min<std::size_t>(count, kBytesPerFrame);
  std::string out(count, '\0');
  for (std::size_t k = 0; k < count; ++k) {
    unsigned byte = 0;
    for (int b = 0; b < 8; ++b) byte = (byte << 1) | p.test(8 * k + static_cast<std::size_t>(b));
    out[k] = static_cast<char>(byte);
  }
  return out;
}

EncoderKind parse_encoder(const std::string& name) {
  if (name == "ref") return EncoderKind::reference;
  if (name == "lfsr") return EncoderKind::lfsr;
  return EncoderKind::parallel;
}

int cmd_gen_matrix(const std::string& out_path) {
  Output out(out_path);
  out.stream() << format_matrix(parity_matrix());
  return 0;
}

int cmd_emit_netlist(const std::string& matrix_path, const std::string& out_path) {
  const ParityMatrix m = load_matrix(matrix_path);
  const XorNetwork net = build_xor3_network(m);
  Output out(out_path);
  out.stream() << emit_netlist(net);
  std::cout << "max_fan_in=" << m.max_fan_in() << " max_depth=" << net.max_depth()
            << " gates=" << net.gates.size() << " reference_max_fan_in=70\n";
  return 0;
}

int cmd_check_netlist(const std::string& netlist_path, const std::string& matrix_path, std::uint64_t trials,
                      std::uint64_t seed) {
  const XorNetwork net = parse_netlist(read_file(netlist_path));
  const ParityMatrix m = load_matrix(matrix_path);

  std::uint64_t mismatches = 0;
  for (int c = 0; c < kInfoBits; ++c) {
    InfoBits unit;
    unit.set(static_cast<std::size_t>(c));
    if (net.evaluate(unit) != m.apply(unit)) ++mismatches;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    InfoBits info;
    for (int c = 0; c < kInfoBits; ++c) info.set(static_cast<std::size_t>(c), (rng() & 1U) != 0);
    if (net.evaluate(info) != m.apply(info)) ++mismatches;
  }
  const bool symbolic = net.to_matrix() == m;
  std::cout << "vectors=" << (trials + kInfoBits) << " mismatches=" << mismatches
            << " symbolic_match=" << (symbolic ? 1 : 0) << " max_depth=" << net.max_depth() << '\n';
  if (mismatches != 0 || !symbolic) {
    std::cerr << "netlist is not equivalent to the parity matrix\n";
    return 2;
  }
  return 0;
}

int cmd_encode(const std::string& in_path, const std::string& out_path, const std::string& encoder) {
  const std::string data = read_file(in_path);
  FrameConfig cfg;
  cfg.encoder = parse_encoder(encoder);
  Output out(out_path);
  for (std::size_t pos = 0; pos < data.size(); pos += kBytesPerFrame) {
    const std::size_t n = std::min<std::size_t>(kBytesPerFrame, data.size() - pos);
    const FrameBytes bytes = frame_to_bytes(build_frame(pack_chunk(data, pos, n), cfg));
    out.stream().write(reinterpret_cast<const char*>(bytes.data()), kFrameBytes);
  }
  return 0;
}

int cmd_decode(const std::string& in_path, const std::string& out_path, const std::string& stats_path) {
  const std::string data = read_file(in_path);
  if (data.size() % kFrameBytes != 0) {
    throw DataError("input length " + std::to_string(data.size()) + " is not a multiple of 40 bytes");
  }
  Output out(out_path);
  std::unique_ptr<Output> stats;
  if (!stats_path.empty()) stats = std::make_unique<Output>(stats_path);

  for (std::size_t f = 0; f * kFrameBytes < data.size(); ++f) {
    const auto* first = reinterpret_cast<const std::uint8_t*>(data.data()) + f * kFrameBytes;
    const UnframeResult r = unframe(frame_from_bytes({first, static_cast<std::size_t>(kFrameBytes)}));
    const std::string bytes = unpack_chunk(r.info);
    out.stream().write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (stats) {
      stats->stream() << "frame=" << f << " header_ok=" << (r.header_ok ? 1 : 0)
                      << " a=" << to_string(r.codewords[0].status) << " b=" << to_string(r.codewords[1].status)
                      << " corrected_symbols=" << r.codewords[0].corrected_symbols + r.codewords[1].corrected_symbols
                      << " bytes=" << bytes.size() << '\n';
    }
  }
  return 0;
}

std::vector<double> parse_ber_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size() || out.back() < 0.0 || out.back() > 1.0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--ber-list", "not a probability: '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--ber-list", "empty list");
  return out;
}

struct SimOptions {
  double ber = 0.0;
  std::string ber_list;
  int burst_len = 0;
  double burst_rate = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool csv = false;
};

void add_sim_options(CLI::App* cmd, SimOptions& o) {
  cmd->add_option("--burst-len", o.burst_len, "Bits flipped per burst")->check(CLI::NonNegativeNumber);
  cmd->add_option("--burst-rate", o.burst_rate, "Mean bursts per frame")->check(CLI::NonNegativeNumber);
  cmd->add_option("--frames", o.frames, "Frames per configuration")->required();
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--csv", o.csv, "Emit CSV with a header row");
}

int cmd_simulate(const SimOptions& o, const std::vector<double>& bers) {
  std::vector<ChannelConfig> cfgs;
  for (double ber : bers) {
    ChannelConfig c;
    c.ber = ber;
    c.burst_len = o.burst_len;
    c.burst_rate = o.burst_rate;
    c.seed = o.seed;
    c.frames = o.frames;
    c.validate();
    cfgs.push_back(c);
  }
  std::cout << emit_stats(cfgs, run_sweep(cfgs, o.jobs), o.csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RS(31,27) codec, parity-circuit generator and channel simulator"};
  app.require_subcommand(1);

  std::string out_path;
  std::string in_path;
  std::string matrix_path;
  std::string netlist_path;
  std::string stats_path;
  std::string encoder = "parallel";
  std::uint64_t trials = 10000;
  std::uint64_t check_seed = 1;
  SimOptions sim;

  auto* gen = app.add_subcommand("gen-matrix", "Derive and write the 20x135 parity matrix");
  gen->add_option("-o,--output", out_path, "Output file ('-' for stdout)")->required();

  auto* emit = app.add_subcommand("emit-netlist", "Build the XOR3 network and write its netlist");
  emit->add_option("-m,--matrix", matrix_path, "Matrix file (default: derived)");
  emit->add_option("-o,--output", out_path, "Output file ('-' for stdout)")->required();

  auto* check = app.add_subcommand("check-netlist", "Check a netlist against the parity matrix");
  check->add_option("-n,--netlist", netlist_path, "Netlist file")->required();
  check->add_option("-m,--matrix", matrix_path, "Matrix file (default: derived)");
  check->add_option("--trials", trials, "Random input vectors");
  check->add_option("--seed", check_seed, "RNG seed");

  auto* enc = app.add_subcommand("encode", "Encode bytes into 40-byte frames");
  enc->add_option("-i,--input", in_path, "Input file ('-' for stdin)")->required();
  enc->add_option("-o,--output", out_path, "Output file ('-' for stdout)")->required();
  enc->add_option("--encoder", encoder, "Encoder implementation")->check(CLI::IsMember({"ref", "lfsr", "parallel"}));

  auto* dec = app.add_subcommand("decode", "Decode 40-byte frames back into bytes");
  dec->add_option("-i,--input", in_path, "Input file ('-' for stdin)")->required();
  dec->add_option("-o,--output", out_path, "Output file ('-' for stdout)")->required();
  dec->add_option("--stats", stats_path, "Per-frame status records");

  auto* simulate = app.add_subcommand("simulate", "Run frames through the noisy channel");
  simulate->add_option("--ber", sim.ber, "Bit error rate")->required()->check(CLI::Range(0.0, 1.0));
  add_sim_options(simulate, sim);

  auto* sweep = app.add_subcommand("sweep", "One simulate record per BER point");
  sweep->add_option("--ber-list", sim.ber_list, "Comma-separated bit error rates")->required();
  add_sim_options(sweep, sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) return cmd_gen_matrix(out_path);
    if (*emit) return cmd_emit_netlist(matrix_path, out_path);
    if (*check) return cmd_check_netlist(netlist_path, matrix_path, trials, check_seed);
    if (*enc) return cmd_encode(in_path, out_path, encoder);
    if (*dec) return cmd_decode(in_path, out_path, stats_path);
    if (*simulate) return cmd_simulate(sim, {sim.ber});
    if (*sweep) return cmd_simulate(sim, parse_ber_list(sim.ber_list));
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
