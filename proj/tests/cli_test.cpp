#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "rs3127/parallel_gen.hpp"

namespace rs3127 {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rs3127_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Runs the tool with stdout captured into `out`; returns the exit code.
  int run(const std::string& args, std::string* out = nullptr) const {
    const std::string capture = path("stdout.txt");
    const std::string cmd = std::string(RS3127_CLI_PATH) + " " + args + " > " + capture + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    if (out) *out = slurp(capture);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  static void spit(const std::string& p, const std::string& data) {
    std::ofstream(p, std::ios::binary) << data;
  }

  fs::path dir_;
};

TEST_F(Cli, GenMatrixWritesParsableMatrix) {
  ASSERT_EQ(run("gen-matrix -o " + path("m.txt")), 0);
  EXPECT_EQ(parse_matrix(slurp(path("m.txt"))), parity_matrix());
}

TEST_F(Cli, EmitAndCheckNetlist) {
  std::string out;
  ASSERT_EQ(run("gen-matrix -o " + path("m.txt")), 0);
  ASSERT_EQ(run("emit-netlist -m " + path("m.txt") + " -o " + path("n.txt"), &out), 0);
  EXPECT_NE(out.find("max_fan_in=79"), std::string::npos) << out;
  EXPECT_NE(out.find("max_depth=4"), std::string::npos) << out;
  EXPECT_NE(out.find("reference_max_fan_in=70"), std::string::npos) << out;
  EXPECT_EQ(run("check-netlist -n " + path("n.txt") + " --trials 2000"), 0);
  EXPECT_EQ(run("check-netlist -n " + path("n.txt") + " -m " + path("m.txt") + " --trials 100"), 0);

  std::string text = slurp(path("n.txt"));
  const auto pos = text.find("out p7 = ");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, text.find('\n', pos) - pos, "out p7 = d0");
  spit(path("bad.txt"), text);
  EXPECT_EQ(run("check-netlist -n " + path("bad.txt")), 2);

  spit(path("junk.txt"), "wire w0 = NAND(d0)\n");
  EXPECT_EQ(run("check-netlist -n " + path("junk.txt")), 2);
}

TEST_F(Cli, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(71);
  for (std::size_t len : {0UL, 1UL, 33UL, 40UL, 100UL, 660UL}) {
    std::string data(len, '\0');
    for (auto& c : data) c = static_cast<char>(rng() & 0xFF);
    spit(path("in.bin"), data);
    for (const char* enc : {"ref", "lfsr", "parallel"}) {
      ASSERT_EQ(run("encode -i " + path("in.bin") + " -o " + path("frames.bin") + " --encoder " + enc), 0);
      const std::string frames = slurp(path("frames.bin"));
      EXPECT_EQ(frames.size() % 40, 0U);
      EXPECT_EQ(frames.size(), 40 * ((len + 32) / 33));
      ASSERT_EQ(run("decode -i " + path("frames.bin") + " -o " + path("out.bin") + " --stats " + path("s.txt")), 0);
      EXPECT_EQ(slurp(path("out.bin")), data) << len << " " << enc;
    }
  }
}

TEST_F(Cli, DecodeCorrectsAndReports) {
  spit(path("in.bin"), std::string(66, 'x'));
  ASSERT_EQ(run("encode -i " + path("in.bin") + " -o " + path("frames.bin")), 0);
  std::string frames = slurp(path("frames.bin"));
  frames[45] = static_cast<char>(frames[45] ^ 0xFF);  // 8-bit burst in frame 1
  spit(path("frames.bin"), frames);
  ASSERT_EQ(run("decode -i " + path("frames.bin") + " -o " + path("out.bin") + " --stats " + path("s.txt")), 0);
  EXPECT_EQ(slurp(path("out.bin")), std::string(66, 'x'));
  const std::string stats = slurp(path("s.txt"));
  EXPECT_NE(stats.find("frame=0 header_ok=1 a=ok b=ok"), std::string::npos) << stats;
  EXPECT_NE(stats.find("frame=1 header_ok=1"), std::string::npos) << stats;
  EXPECT_NE(stats.find("corrected"), std::string::npos) << stats;
}

TEST_F(Cli, PipesThroughStdio) {
  spit(path("in.bin"), "hello, frames");
  const std::string cmd = std::string(RS3127_CLI_PATH) + " encode -i " + path("in.bin") + " -o - | " +
                          RS3127_CLI_PATH + " decode -i - -o " + path("out.bin");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(path("out.bin")), "hello, frames");
}

TEST_F(Cli, DecodeRejectsMisalignedInput) {
  spit(path("bad.bin"), std::string(41, '\0'));
  EXPECT_EQ(run("decode -i " + path("bad.bin") + " -o " + path("out.bin")), 2);
  EXPECT_EQ(run("decode -i " + path("missing.bin") + " -o " + path("out.bin")), 2);
}

TEST_F(Cli, SimulateCleanChannel) {
  std::string out;
  ASSERT_EQ(run("simulate --ber 0 --frames 100", &out), 0);
  EXPECT_TRUE(out.starts_with("ber=0 burst_len=0 burst_rate=0 seed=1 frames=100 frames_total=100 frames_err_pre=0 "
                              "frames_err_post=0 frames_recovered=0 miscorrections=0 detected_uncorrectable=0"))
      << out;
  EXPECT_NE(out.find("bit_err_pre=0 bit_err_post=0"), std::string::npos);
}

TEST_F(Cli, SimulateAndSweepReplayAcrossJobs) {
  std::string a, b, c;
  ASSERT_EQ(run("simulate --ber 0.004 --burst-len 7 --burst-rate 0.3 --frames 3000 --seed 9 --jobs 1", &a), 0);
  ASSERT_EQ(run("simulate --ber 0.004 --burst-len 7 --burst-rate 0.3 --frames 3000 --seed 9 --jobs 4", &b), 0);
  EXPECT_EQ(a, b);
  ASSERT_EQ(run("sweep --ber-list 0.001,0.01 --frames 2000 --seed 3 --jobs 1 --csv", &a), 0);
  ASSERT_EQ(run("sweep --ber-list 0.001,0.01 --frames 2000 --seed 3 --jobs 3 --csv", &c), 0);
  EXPECT_EQ(a, c);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 3);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("gen-matrix"), 1);
  EXPECT_EQ(run("gen-matrix -o x --bogus"), 1);
  EXPECT_EQ(run("simulate --ber 2 --frames 1"), 1);
  EXPECT_EQ(run("sweep --ber-list 0.1,abc --frames 1"), 1);
  EXPECT_EQ(run("encode -i a -o b --encoder fancy"), 1);
  EXPECT_EQ(run("--help"), 0);
}

}  // namespace
}  // namespace rs3127
