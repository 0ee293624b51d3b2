#include "rs3127/rs_core.hpp"

#include <algorithm>

namespace rs3127 {

GfElement GeneratorPoly::evaluate(GfElement x) const noexcept {
  GfElement acc = kZero;
  for (int d = kParityLength; d >= 0; --d) acc = acc * x + coeffs[static_cast<std::size_t>(d)];
  return acc;
}

GeneratorPoly build_generator_poly() {
  GeneratorPoly g;
  g.coeffs[0] = kOne;
  // Multiply in one (x + root) factor at a time; degree grows by one each pass.
  for (int i = 0; i < kParityLength; ++i) {
    const GfElement root = gf_alpha_pow(kFirstRoot + i);
    for (int d = i + 1; d > 0; --d) {
      g.coeffs[d] = g.coeffs[d - 1] + g.coeffs[d] * root;
    }
    g.coeffs[0] = g.coeffs[0] * root;
  }
  return g;
}

const GeneratorPoly& generator_poly() {
  static const GeneratorPoly g = build_generator_poly();
  return g;
}

GfElement evaluate_high_first(std::span<const GfElement> coeffs, GfElement x) noexcept {
  GfElement acc = kZero;
  for (GfElement c : coeffs) acc = acc * x + c;
  return acc;
}

Codeword encode_reference(const Message& msg) {
  const GeneratorPoly& g = generator_poly();

  // work[0..30] holds m(x) x^4, highest degree first; reduce in place.
  Codeword work{};
  std::copy(msg.begin(), msg.end(), work.begin());
  for (int j = 0; j < kMessageLength; ++j) {
    const GfElement lead = work[j];
    if (lead.is_zero()) continue;
    // Subtract lead * x^(26-j) * g(x). Term x^d of g lands on work[j + 4 - d].
    for (int d = 0; d <= kParityLength; ++d) work[j + kParityLength - d] += lead * g[d];
  }

  Codeword cw{};
  std::copy(msg.begin(), msg.end(), cw.begin());
  std::copy(work.begin() + kMessageLength, work.end(), cw.begin() + kMessageLength);
  return cw;
}

bool is_codeword(const Codeword& cw) noexcept {
  for (int i = 0; i < kParityLength; ++i) {
    if (!evaluate_high_first(cw, gf_alpha_pow(kFirstRoot + i)).is_zero()) return false;
  }
  return true;
}

Message message_of(const Codeword& cw) noexcept {
  Message m{};
  std::copy(cw.begin(), cw.begin() + kMessageLength, m.begin());
  return m;
}

Codeword operator+(const Codeword& a, const Codeword& b) noexcept {
  Codeword r{};
  for (int j = 0; j < kCodeLength; ++j) r[j] = a[j] + b[j];
  return r;
}

}  // namespace rs3127
