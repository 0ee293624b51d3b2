#include "rs3127/framing.hpp"

#include <stdexcept>
#include <string>

#include "rs3127/parallel_encoder.hpp"
#include "rs3127/serial_encoder.hpp"

namespace rs3127 {

namespace {

constexpr int kSlotBits = 2 * kSymbolBits;

Payload build_prbs() {
  // Fibonacci register, stage 7 is the output; feedback = s7 ^ s6.
  unsigned reg = 0x7F;
  Payload seq;
  for (int n = 0; n < kPayloadBits; ++n) {
    const unsigned s7 = (reg >> 6) & 1U;
    const unsigned s6 = (reg >> 5) & 1U;
    seq.set(static_cast<std::size_t>(n), s7 != 0);
    reg = ((reg << 1) | (s7 ^ s6)) & 0x7F;
  }
  return seq;
}

InfoBits half(const Payload& p, int which) {
  InfoBits out;
  for (int c = 0; c < kInfoBits; ++c) out.set(static_cast<std::size_t>(c), p.test(static_cast<std::size_t>(which * kInfoBits + c)));
  return out;
}

}  // namespace

const Payload& prbs_sequence() {
  static const Payload seq = build_prbs();
  return seq;
}

Payload scramble(const Payload& payload) noexcept { return payload ^ prbs_sequence(); }
Payload descramble(const Payload& payload) noexcept { return scramble(payload); }

Payload payload_from_vector(const std::vector<bool>& bits) {
  if (bits.size() != static_cast<std::size_t>(kPayloadBits)) {
    throw std::invalid_argument("payload must be exactly 270 bits, got " + std::to_string(bits.size()));
  }
  Payload p;
  for (int n = 0; n < kPayloadBits; ++n) p.set(static_cast<std::size_t>(n), bits[n]);
  return p;
}

InterleavedBits interleave(const Codeword& a, const Codeword& b) noexcept {
  InterleavedBits out;
  for (int s = 0; s < kCodeLength; ++s) {
    for (int i = 0; i < kSymbolBits; ++i) {
      out.set(static_cast<std::size_t>(kSlotBits * s + i), a[s].bit(kSymbolBits - 1 - i));
      out.set(static_cast<std::size_t>(kSlotBits * s + kSymbolBits + i), b[s].bit(kSymbolBits - 1 - i));
    }
  }
  return out;
}

std::pair<Codeword, Codeword> deinterleave(const InterleavedBits& bits) {
  std::pair<Codeword, Codeword> out;
  for (int s = 0; s < kCodeLength; ++s) {
    unsigned va = 0;
    unsigned vb = 0;
    for (int i = 0; i < kSymbolBits; ++i) {
      va = (va << 1) | static_cast<unsigned>(bits.test(static_cast<std::size_t>(kSlotBits * s + i)));
      vb = (vb << 1) | static_cast<unsigned>(bits.test(static_cast<std::size_t>(kSlotBits * s + kSymbolBits + i)));
    }
    out.first[s] = GfElement(va);
    out.second[s] = GfElement(vb);
  }
  return out;
}

Codeword encode_with(const InfoBits& info, EncoderKind kind) {
  switch (kind) {
    case EncoderKind::reference: return encode_reference(bits_to_message(info));
    case EncoderKind::lfsr: return lfsr_encode(bits_to_message(info));
    case EncoderKind::parallel: return encode_parallel(info);
  }
  throw std::invalid_argument("unknown encoder kind");
}

Frame build_frame(const Payload& info, const FrameConfig& cfg) {
  const Payload scrambled = scramble(info);
  const Codeword a = encode_with(half(scrambled, 0), cfg.encoder);
  const Codeword b = encode_with(half(scrambled, 1), cfg.encoder);
  const InterleavedBits body = interleave(a, b);

  Frame frame;
  for (int k = 0; k < kHeaderBits; ++k) frame.set(static_cast<std::size_t>(k), (cfg.header >> (kHeaderBits - 1 - k)) & 1U);
  for (int n = 0; n < kInterleavedBits; ++n) frame.set(static_cast<std::size_t>(kHeaderBits + n), body.test(static_cast<std::size_t>(n)));
  return frame;
}

UnframeResult unframe(const Frame& frame, const FrameConfig& cfg) {
  UnframeResult result;
  for (int k = 0; k < kHeaderBits; ++k) {
    const bool expected = (cfg.header >> (kHeaderBits - 1 - k)) & 1U;
    if (frame.test(static_cast<std::size_t>(k)) != expected) result.header_ok = false;
  }

  InterleavedBits body;
  for (int n = 0; n < kInterleavedBits; ++n) body.set(static_cast<std::size_t>(n), frame.test(static_cast<std::size_t>(kHeaderBits + n)));
  const auto [a, b] = deinterleave(body);
  result.codewords[0] = decode(a);
  result.codewords[1] = decode(b);

  Payload scrambled;
  for (int which = 0; which < 2; ++which) {
    const InfoBits bits = message_to_bits(result.codewords[which].message);
    for (int c = 0; c < kInfoBits; ++c) scrambled.set(static_cast<std::size_t>(which * kInfoBits + c), bits.test(static_cast<std::size_t>(c)));
  }
  result.info = descramble(scrambled);
  return result;
}

FrameBytes frame_to_bytes(const Frame& frame) noexcept {
  FrameBytes bytes{};
  for (int n = 0; n < kFrameBits; ++n) {
    if (frame.test(static_cast<std::size_t>(n))) bytes[n / 8] |= static_cast<std::uint8_t>(0x80U >> (n % 8));
  }
  return bytes;
}

Frame frame_from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != static_cast<std::size_t>(kFrameBytes)) {
    throw std::invalid_argument("frame must be exactly 40 bytes, got " + std::to_string(bytes.size()));
  }
  Frame frame;
  for (int n = 0; n < kFrameBits; ++n) frame.set(static_cast<std::size_t>(n), (bytes[n / 8] >> (7 - n % 8)) & 1U);
  return frame;
}

std::pair<int, int> burst_symbol_hits(int offset, int length) noexcept {
  std::pair<int, int> hits{0, 0};
  if (length <= 0) return hits;
  const int first = offset / kSymbolBits;
  const int last = (offset + length - 1) / kSymbolBits;
  // Slot k belongs to codeword A when k is even.
  for (int slot = first; slot <= last; ++slot) (slot % 2 == 0 ? hits.first : hits.second)++;
  return hits;
}

}  // namespace rs3127
