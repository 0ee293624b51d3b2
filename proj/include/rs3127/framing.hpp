#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rs3127/decoder.hpp"
#include "rs3127/parallel_gen.hpp"
#include "rs3127/rs_core.hpp"

namespace rs3127 {

inline constexpr int kHeaderBits = 10;
inline constexpr int kInterleavedBits = 2 * kCodewordBits;      // 310
inline constexpr int kFrameBits = kHeaderBits + kInterleavedBits;  // 320
inline constexpr int kFrameBytes = kFrameBits / 8;                // 40
inline constexpr int kPayloadBits = 2 * kInfoBits;                // 270
inline constexpr std::uint16_t kDefaultSyncHeader = 0b1101010010;

/// User bits carried by one frame; bits [0, 135) go to codeword A.
using Payload = std::bitset<kPayloadBits>;
using InterleavedBits = std::bitset<kInterleavedBits>;
/// Bits 0..9 header (MSB of the sync word first), bits 10..319 interleaved codewords.
using Frame = std::bitset<kFrameBits>;
using FrameBytes = std::array<std::uint8_t, kFrameBytes>;

enum class EncoderKind { reference, lfsr, parallel };

struct FrameConfig {
  std::uint16_t header = kDefaultSyncHeader;
  EncoderKind encoder = EncoderKind::parallel;
};

/// Bits of the x^7 + x^6 + 1 generator seeded with all ones, one per payload bit.
const Payload& prbs_sequence();

/// Additive frame-synchronous scrambler; its own inverse.
Payload scramble(const Payload& payload) noexcept;
Payload descramble(const Payload& payload) noexcept;

/// Throws std::invalid_argument unless bits.size() == 270.
Payload payload_from_vector(const std::vector<bool>& bits);

/// Symbol-alternating: payload bit 10*s + i is bit (4-i) of A[s], 10*s + 5 + i
/// is bit (4-i) of B[s].
InterleavedBits interleave(const Codeword& a, const Codeword& b) noexcept;
std::pair<Codeword, Codeword> deinterleave(const InterleavedBits& bits);

Codeword encode_with(const InfoBits& info, EncoderKind kind);

Frame build_frame(const Payload& info, const FrameConfig& cfg = {});

struct UnframeResult {
  Payload info;
  bool header_ok = true;
  std::array<DecodeResult, 2> codewords{};
};

UnframeResult unframe(const Frame& frame, const FrameConfig& cfg = {});

/// Frame bit 0 is the most significant bit of byte 0.
FrameBytes frame_to_bytes(const Frame& frame) noexcept;
/// Throws std::invalid_argument unless exactly 40 bytes are given.
Frame frame_from_bytes(std::span<const std::uint8_t> bytes);

/// Number of interleaved symbol slots touched by a burst of `length` bits at
/// payload offset `offset`, split per codeword {A, B}.
std::pair<int, int> burst_symbol_hits(int offset, int length) noexcept;

}  // namespace rs3127
