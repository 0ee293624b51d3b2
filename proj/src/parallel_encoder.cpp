#include "rs3127/parallel_encoder.hpp"

#include <algorithm>

namespace rs3127 {

namespace {

Codeword assemble(const InfoBits& info, const ParityBits& parity) {
  Codeword cw{};
  const Message msg = bits_to_message(info);
  std::copy(msg.begin(), msg.end(), cw.begin());
  for (int jp = 0; jp < kParityLength; ++jp) {
    unsigned v = 0;
    for (int i = 0; i < kSymbolBits; ++i) {
      if (parity.test(static_cast<std::size_t>(parity_bit_index(jp, i)))) v |= 1U << i;
    }
    cw[kMessageLength + jp] = GfElement(v);
  }
  return cw;
}

}  // namespace

InfoBits message_to_bits(const Message& msg) noexcept {
  InfoBits bits;
  for (int j = 0; j < kMessageLength; ++j) {
    for (int i = 0; i < kSymbolBits; ++i) bits.set(static_cast<std::size_t>(info_bit_index(j, i)), msg[j].bit(i));
  }
  return bits;
}

Message bits_to_message(const InfoBits& info) {
  Message msg{};
  for (int j = 0; j < kMessageLength; ++j) {
    unsigned v = 0;
    for (int i = 0; i < kSymbolBits; ++i) {
      if (info.test(static_cast<std::size_t>(info_bit_index(j, i)))) v |= 1U << i;
    }
    msg[j] = GfElement(v);
  }
  return msg;
}

ParityBits codeword_parity_bits(const Codeword& cw) noexcept {
  ParityBits p;
  for (int jp = 0; jp < kParityLength; ++jp) {
    for (int i = 0; i < kSymbolBits; ++i) {
      p.set(static_cast<std::size_t>(parity_bit_index(jp, i)), cw[kMessageLength + jp].bit(i));
    }
  }
  return p;
}

Codeword encode_parallel(const InfoBits& info, const ParityMatrix& matrix) {
  return assemble(info, matrix.apply(info));
}

Codeword encode_via_network(const InfoBits& info, const XorNetwork& net) {
  return assemble(info, net.evaluate(info));
}

}  // namespace rs3127
