#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "rs3127/rs_core.hpp"

namespace rs3127 {

/// s[i] = r(alpha^(i+1)).
using Syndromes = std::array<GfElement, kParityLength>;

/// Polynomial over GF(32), coefficient of x^d at index d, degree at most 4.
using LocatorPoly = std::array<GfElement, kParityLength + 1>;

int poly_degree(const LocatorPoly& p) noexcept;  // -1 for the zero polynomial
GfElement poly_eval(const LocatorPoly& p, GfElement x) noexcept;

struct ErrorLocator {
  LocatorPoly lambda{};
  /// S(x) * lambda(x) mod x^4.
  LocatorPoly omega{};

  int degree() const noexcept { return poly_degree(lambda); }
};

enum class DecodeStatus { ok, corrected, uncorrectable };

std::string_view to_string(DecodeStatus s) noexcept;

struct DecodeResult {
  Message message{};
  int corrected_symbols = 0;
  DecodeStatus status = DecodeStatus::ok;
};

Syndromes compute_syndromes(const Codeword& received) noexcept;

bool all_zero(const Syndromes& s) noexcept;

/// Inverse-free Berlekamp-Massey over 4 iterations. The locator is a nonzero
/// scalar multiple of the classical one, so its roots are the same.
ErrorLocator solve_locator(const Syndromes& s) noexcept;

/// Positions j (0..30) where lambda(alpha^-(30-j)) = 0, ascending.
std::vector<int> chien_search(const LocatorPoly& lambda);

/// Error magnitude at a verified root position, or nullopt if lambda' vanishes there.
std::optional<GfElement> forney(const ErrorLocator& loc, int position);

DecodeResult decode(const Codeword& received);

}  // namespace rs3127
