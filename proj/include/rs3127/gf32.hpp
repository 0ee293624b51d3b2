#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace rs3127 {

/// Degree-5 primitive polynomial x^5 + x^2 + 1. Every derived constant
/// (generator polynomial, parity matrix, netlists) follows from this value.
inline constexpr unsigned kPrimitivePoly = 0x25;

inline constexpr int kSymbolBits = 5;
inline constexpr int kFieldSize = 1 << kSymbolBits;  // 32
inline constexpr int kGroupOrder = kFieldSize - 1;   // 31

/// An element of GF(2^5) in polynomial basis: bit i is the coefficient of x^i.
/// The primitive element alpha is x, i.e. value 2.
class GfElement {
 public:
  constexpr GfElement() noexcept = default;

  constexpr explicit GfElement(unsigned value) : value_(static_cast<std::uint8_t>(value)) {
    if (value >= static_cast<unsigned>(kFieldSize)) {
      throw std::out_of_range("GF(32) element out of range");
    }
  }

  constexpr std::uint8_t value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }
  constexpr bool bit(int i) const noexcept { return (value_ >> i) & 1U; }

  friend constexpr bool operator==(GfElement, GfElement) noexcept = default;

 private:
  std::uint8_t value_ = 0;
};

inline constexpr GfElement kZero{0};
inline constexpr GfElement kOne{1};
inline constexpr GfElement kAlpha{2};

/// Log/antilog tables. exp[i] = alpha^i for 0 <= i < 31; log[a] is only
/// meaningful for nonzero a.
struct GfTables {
  std::array<GfElement, kGroupOrder> exp{};
  std::array<std::uint8_t, kFieldSize> log{};
};

namespace detail {

constexpr GfTables build_tables(unsigned prim) {
  GfTables t;
  unsigned sr = 1;
  for (int i = 0; i < kGroupOrder; ++i) {
    t.exp[i] = GfElement(sr);
    t.log[sr] = static_cast<std::uint8_t>(i);
    sr <<= 1;
    if (sr & static_cast<unsigned>(kFieldSize)) sr ^= prim;
  }
  if (sr != 1) throw std::logic_error("field polynomial is not primitive");
  return t;
}

}  // namespace detail

inline constexpr GfTables kTables = detail::build_tables(kPrimitivePoly);

constexpr GfElement gf_add(GfElement a, GfElement b) noexcept {
  return GfElement(static_cast<unsigned>(a.value() ^ b.value()));
}

constexpr GfElement gf_mul(GfElement a, GfElement b) noexcept {
  if (a.is_zero() || b.is_zero()) return kZero;
  return kTables.exp[(kTables.log[a.value()] + kTables.log[b.value()]) % kGroupOrder];
}

/// Multiplicative inverse. Throws std::domain_error for zero.
GfElement gf_inv(GfElement a);

/// a^e, exponent reduced mod 31 for nonzero a. 0^0 = 1, 0^e = 0 for e > 0.
/// Throws std::domain_error for zero raised to a negative power.
GfElement gf_pow(GfElement a, long long e);

/// alpha^e for any integer e.
constexpr GfElement gf_alpha_pow(long long e) noexcept {
  long long r = e % kGroupOrder;
  if (r < 0) r += kGroupOrder;
  return kTables.exp[static_cast<std::size_t>(r)];
}

constexpr GfElement operator+(GfElement a, GfElement b) noexcept { return gf_add(a, b); }
constexpr GfElement operator*(GfElement a, GfElement b) noexcept { return gf_mul(a, b); }
constexpr GfElement& operator+=(GfElement& a, GfElement b) noexcept { return a = gf_add(a, b); }
constexpr GfElement& operator*=(GfElement& a, GfElement b) noexcept { return a = gf_mul(a, b); }

}  // namespace rs3127
