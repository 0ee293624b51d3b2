#pragma once

#include "rs3127/parallel_gen.hpp"
#include "rs3127/rs_core.hpp"

namespace rs3127 {

InfoBits message_to_bits(const Message& msg) noexcept;
Message bits_to_message(const InfoBits& info);

ParityBits codeword_parity_bits(const Codeword& cw) noexcept;

/// Single-evaluation encoder: parity bit r is the XOR of the info bits in row r.
Codeword encode_parallel(const InfoBits& info, const ParityMatrix& matrix = parity_matrix());

/// Functional model of an emitted netlist; matches encode_parallel for the
/// matrix the network was built from.
Codeword encode_via_network(const InfoBits& info, const XorNetwork& net);

}  // namespace rs3127
