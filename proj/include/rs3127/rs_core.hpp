#pragma once

#include <array>
#include <span>

#include "rs3127/gf32.hpp"

namespace rs3127 {

inline constexpr int kCodeLength = 31;
inline constexpr int kMessageLength = 27;
inline constexpr int kParityLength = kCodeLength - kMessageLength;  // 4
inline constexpr int kCorrectable = kParityLength / 2;              // t = 2
/// First generator root is alpha^kFirstRoot; roots are alpha^1..alpha^4.
inline constexpr int kFirstRoot = 1;

inline constexpr int kInfoBits = kMessageLength * kSymbolBits;    // 135
inline constexpr int kParityBits = kParityLength * kSymbolBits;   // 20
inline constexpr int kCodewordBits = kCodeLength * kSymbolBits;   // 155

/// Symbol 0 is the coefficient of x^30 and is transmitted first.
using Message = std::array<GfElement, kMessageLength>;

/// Positions 0..26 hold the message, 27..30 the parity. Symbol j is the
/// coefficient of x^(30-j).
using Codeword = std::array<GfElement, kCodeLength>;

/// Monic g(x) = (x - a^1)(x - a^2)(x - a^3)(x - a^4); coeffs[d] multiplies x^d.
struct GeneratorPoly {
  std::array<GfElement, kParityLength + 1> coeffs{};

  GfElement operator[](int degree) const { return coeffs[static_cast<std::size_t>(degree)]; }
  GfElement evaluate(GfElement x) const noexcept;
};

GeneratorPoly build_generator_poly();

/// Cached result of build_generator_poly().
const GeneratorPoly& generator_poly();

/// Horner evaluation of a polynomial given highest-degree coefficient first.
GfElement evaluate_high_first(std::span<const GfElement> coeffs, GfElement x) noexcept;

/// Systematic encoder by long division of m(x) x^4 by g(x).
Codeword encode_reference(const Message& msg);

/// True iff c(alpha^i) = 0 for i = 1..4.
bool is_codeword(const Codeword& cw) noexcept;

Message message_of(const Codeword& cw) noexcept;

/// Symbol-wise sum.
Codeword operator+(const Codeword& a, const Codeword& b) noexcept;

}  // namespace rs3127
