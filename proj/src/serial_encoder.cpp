#include "rs3127/serial_encoder.hpp"

#include <stdexcept>

namespace rs3127 {

LfsrState lfsr_reset(const LfsrState&) noexcept { return LfsrState{}; }

LfsrStep lfsr_cycle(const LfsrState& state, GfElement in_symbol) {
  if (state.phase >= kSerialCycles) throw std::logic_error("lfsr_cycle: codeword complete, reset required");

  LfsrStep step{state, kZero};
  auto& regs = step.state.regs;
  if (state.mode() == LfsrMode::shift_in) {
    const GeneratorPoly& g = generator_poly();
    const GfElement feedback = in_symbol + state.regs[kParityLength - 1];
    for (int d = kParityLength - 1; d > 0; --d) regs[d] = state.regs[d - 1] + feedback * g[d];
    regs[0] = feedback * g[0];
    step.out = in_symbol;
  } else {
    step.out = state.regs[kParityLength - 1];
    for (int d = kParityLength - 1; d > 0; --d) regs[d] = state.regs[d - 1];
    regs[0] = kZero;
  }
  ++step.state.phase;
  return step;
}

LfsrRun lfsr_encode_traced(const Message& msg) {
  LfsrRun run;
  LfsrState state = lfsr_reset();
  for (int j = 0; j < kCodeLength; ++j) {
    const GfElement in = j < kMessageLength ? msg[j] : kZero;
    const LfsrStep step = lfsr_cycle(state, in);
    run.codeword[j] = step.out;
    state = step.state;
    ++run.cycles;
  }
  if (run.cycles != kSerialCycles || state.phase != kSerialCycles) {
    throw std::logic_error("lfsr_encode: unexpected cycle count");
  }
  run.final_state = state;
  return run;
}

Codeword lfsr_encode(const Message& msg) { return lfsr_encode_traced(msg).codeword; }

}  // namespace rs3127
