#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rs3127/rs_core.hpp"

namespace rs3127 {

/// Information bit 5*j + i is bit i (LSB = x^0 coefficient) of message symbol j.
using InfoBits = std::bitset<kInfoBits>;
/// Parity bit 5*jp + i is bit i of parity symbol jp (codeword position 27 + jp).
using ParityBits = std::bitset<kParityBits>;

constexpr int info_bit_index(int symbol, int bit) noexcept { return kSymbolBits * symbol + bit; }
constexpr int parity_bit_index(int parity_symbol, int bit) noexcept {
  return kSymbolBits * parity_symbol + bit;
}

/// GF(2) sum of a set of information bits. Empty means constant 0.
struct LinearForm {
  InfoBits terms;

  int fan_in() const noexcept { return static_cast<int>(terms.count()); }
  bool evaluate(const InfoBits& info) const noexcept { return ((terms & info).count() & 1U) != 0; }
  std::vector<int> indices() const;

  LinearForm& operator+=(const LinearForm& o) noexcept {
    terms ^= o.terms;
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) noexcept { return a += b; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// 20 x 135 binary matrix: row r lists the information bits XORed into parity bit r.
class ParityMatrix {
 public:
  ParityMatrix() = default;
  explicit ParityMatrix(const std::array<LinearForm, kParityBits>& rows) : rows_(rows) {}

  const LinearForm& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }
  const std::array<LinearForm, kParityBits>& rows() const noexcept { return rows_; }
  bool entry(int r, int c) const { return row(r).terms.test(static_cast<std::size_t>(c)); }

  ParityBits apply(const InfoBits& info) const noexcept;
  int rank() const noexcept;
  int max_fan_in() const noexcept;

  friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;

 private:
  std::array<LinearForm, kParityBits> rows_{};
};

/// Syntax or semantic error in a matrix or netlist text. line() is 1-based,
/// 0 when the problem is not tied to a single line.
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Symbolically runs the serial division circuit over GF(2) linear forms for
/// the 27 shift-in cycles and reads the register forms out as parity rows.
/// Throws std::logic_error if the result is not of full rank.
ParityMatrix derive_parity_matrix();

/// Cached result of derive_parity_matrix().
const ParityMatrix& parity_matrix();

std::string format_matrix(const ParityMatrix& m);
ParityMatrix parse_matrix(std::string_view text);

/// A gate input or network output: an information bit, an earlier gate, or 0.
struct Signal {
  enum class Kind : std::uint8_t { zero, input, gate };

  Kind kind = Kind::zero;
  int index = 0;

  static constexpr Signal zero() noexcept { return {}; }
  static constexpr Signal input(int i) noexcept { return {Kind::input, i}; }
  static constexpr Signal gate(int i) noexcept { return {Kind::gate, i}; }

  friend bool operator==(const Signal&, const Signal&) = default;
};

struct XorGate {
  std::array<Signal, 3> inputs{};
};

struct NetworkTrace {
  ParityBits parity;
  std::size_t gates_evaluated = 0;
  int max_depth = 0;
};

/// Netlist of 3-input XOR gates in topological order.
struct XorNetwork {
  std::vector<XorGate> gates;
  std::array<Signal, kParityBits> outputs{};
  std::array<int, kParityBits> depth{};

  int max_depth() const noexcept;
  ParityBits evaluate(const InfoBits& info) const;
  NetworkTrace evaluate_traced(const InfoBits& info) const;
  /// Linear form computed by each output, recovered symbolically.
  ParityMatrix to_matrix() const;
};

/// ceil(log3(n)) for n >= 1; 0 for n <= 1.
int xor3_tree_depth(int fan_in) noexcept;

/// One balanced ternary tree per parity row, leaves in ascending bit order,
/// the tail gate of a level ZERO-padded. No sharing across rows.
XorNetwork build_xor3_network(const ParityMatrix& matrix);

/// Per-output depth of an arbitrary acyclic network (inputs and ZERO are depth 0).
std::array<int, kParityBits> compute_depths(const std::vector<XorGate>& gates,
                                            const std::array<Signal, kParityBits>& outputs);

std::string emit_netlist(const XorNetwork& net);
XorNetwork parse_netlist(std::string_view text);

}  // namespace rs3127
