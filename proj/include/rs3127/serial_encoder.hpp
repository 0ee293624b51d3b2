#pragma once

#include <array>

#include "rs3127/rs_core.hpp"

namespace rs3127 {

/// Cycles per codeword on the 5-bit serial port: 27 shift-in plus 4 shift-out.
inline constexpr int kSerialCycles = kCodeLength;

enum class LfsrMode { shift_in, shift_out };

/// Register file of the serial division circuit. regs[d] holds the running
/// coefficient of x^d of the remainder.
struct LfsrState {
  std::array<GfElement, kParityLength> regs{};
  int phase = 0;

  LfsrMode mode() const noexcept {
    return phase < kMessageLength ? LfsrMode::shift_in : LfsrMode::shift_out;
  }
  friend bool operator==(const LfsrState&, const LfsrState&) = default;
};

struct LfsrStep {
  LfsrState state;
  GfElement out;
};

LfsrState lfsr_reset(const LfsrState& state = {}) noexcept;

/// One clock. In shift-in mode the input symbol is passed to the output and
/// folded into the division; in shift-out mode the feedback is gated off and
/// the registers unload highest-degree first. Throws std::logic_error when
/// clocked past the last cycle without a reset.
LfsrStep lfsr_cycle(const LfsrState& state, GfElement in_symbol);

struct LfsrRun {
  Codeword codeword{};
  LfsrState final_state{};
  int cycles = 0;
};

LfsrRun lfsr_encode_traced(const Message& msg);
Codeword lfsr_encode(const Message& msg);

}  // namespace rs3127
