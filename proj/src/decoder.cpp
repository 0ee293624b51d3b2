#include "rs3127/decoder.hpp"

#include <algorithm>

namespace rs3127 {

namespace {

// Locator x^-1 for codeword position j: alpha^-(30-j).
GfElement inverse_locator(int position) noexcept { return gf_alpha_pow(position - (kCodeLength - 1)); }

}  // namespace

int poly_degree(const LocatorPoly& p) noexcept {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    if (!p[d].is_zero()) return d;
  }
  return -1;
}

GfElement poly_eval(const LocatorPoly& p, GfElement x) noexcept {
  GfElement acc = kZero;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string_view to_string(DecodeStatus s) noexcept {
  switch (s) {
    case DecodeStatus::ok: return "ok";
    case DecodeStatus::corrected: return "corrected";
    case DecodeStatus::uncorrectable: return "uncorrectable";
  }
  return "?";
}

Syndromes compute_syndromes(const Codeword& received) noexcept {
  Syndromes s{};
  for (int i = 0; i < kParityLength; ++i) s[i] = evaluate_high_first(received, gf_alpha_pow(kFirstRoot + i));
  return s;
}

bool all_zero(const Syndromes& s) noexcept {
  return std::all_of(s.begin(), s.end(), [](GfElement e) { return e.is_zero(); });
}

ErrorLocator solve_locator(const Syndromes& s) noexcept {
  // Reed-Shih style iteration: lambda <- gamma*lambda - delta*x*b, where the
  // previous discrepancy gamma replaces the division of classical BM.
  LocatorPoly lambda{kOne};
  LocatorPoly b{kOne};
  GfElement gamma = kOne;
  int k = 0;

  for (int r = 0; r < kParityLength; ++r) {
    GfElement delta = kZero;
    for (int i = 0; i <= r && i <= kParityLength; ++i) delta += lambda[i] * s[r - i];

    LocatorPoly next{};
    for (int d = 0; d <= kParityLength; ++d) {
      next[d] = gamma * lambda[d] + (d > 0 ? delta * b[d - 1] : kZero);
    }
    if (!delta.is_zero() && k >= 0) {
      b = lambda;
      gamma = delta;
      k = -k - 1;
    } else {
      for (int d = kParityLength; d > 0; --d) b[d] = b[d - 1];
      b[0] = kZero;
      ++k;
    }
    lambda = next;
  }

  ErrorLocator loc;
  loc.lambda = lambda;
  for (int d = 0; d < kParityLength; ++d) {
    for (int i = 0; i <= d; ++i) loc.omega[d] += lambda[i] * s[d - i];
  }
  return loc;
}

std::vector<int> chien_search(const LocatorPoly& lambda) {
  // term[d] tracks lambda_d * x^d at x = alpha^(j-30); stepping j multiplies by alpha^d.
  LocatorPoly term{};
  for (int d = 0; d < static_cast<int>(lambda.size()); ++d) {
    term[d] = lambda[d] * gf_alpha_pow(static_cast<long long>(d) * (0 - (kCodeLength - 1)));
  }
  std::vector<int> roots;
  for (int j = 0; j < kCodeLength; ++j) {
    GfElement sum = kZero;
    for (GfElement t : term) sum += t;
    if (sum.is_zero()) roots.push_back(j);
    for (int d = 1; d < static_cast<int>(term.size()); ++d) term[d] *= gf_alpha_pow(d);
  }
  return roots;
}

std::optional<GfElement> forney(const ErrorLocator& loc, int position) {
  const GfElement x = inverse_locator(position);
  // Formal derivative in characteristic 2 keeps the odd-degree terms only.
  LocatorPoly derivative{};
  for (int d = 1; d < static_cast<int>(loc.lambda.size()); d += 2) derivative[d - 1] = loc.lambda[d];
  const GfElement denom = poly_eval(derivative, x);
  if (denom.is_zero()) return std::nullopt;
  // With the first root at alpha^1 the X^(1-b) correction factor is 1, and
  // any scalar carried by the inverse-free lambda cancels in the ratio.
  return poly_eval(loc.omega, x) * gf_inv(denom);
}

DecodeResult decode(const Codeword& received) {
  DecodeResult result;
  result.message = message_of(received);

  const Syndromes s = compute_syndromes(received);
  if (all_zero(s)) return result;

  const auto uncorrectable = [&] {
    result.status = DecodeStatus::uncorrectable;
    result.corrected_symbols = 0;
    result.message = message_of(received);
    return result;
  };

  const ErrorLocator loc = solve_locator(s);
  const int degree = loc.degree();
  if (degree < 1 || degree > kCorrectable) return uncorrectable();

  const std::vector<int> positions = chien_search(loc.lambda);
  if (static_cast<int>(positions.size()) != degree) return uncorrectable();

  Codeword fixed = received;
  for (int j : positions) {
    const auto magnitude = forney(loc, j);
    if (!magnitude || magnitude->is_zero()) return uncorrectable();
    fixed[j] += *magnitude;
  }
  if (!is_codeword(fixed)) return uncorrectable();

  result.message = message_of(fixed);
  result.corrected_symbols = degree;
  result.status = DecodeStatus::corrected;
  return result;
}

}  // namespace rs3127
