#include "rs3127/gf32.hpp"

namespace rs3127 {

GfElement gf_inv(GfElement a) {
  if (a.is_zero()) throw std::domain_error("gf_inv: zero has no inverse");
  return kTables.exp[(kGroupOrder - kTables.log[a.value()]) % kGroupOrder];
}

GfElement gf_pow(GfElement a, long long e) {
  if (a.is_zero()) {
    if (e < 0) throw std::domain_error("gf_pow: zero raised to a negative power");
    return e == 0 ? kOne : kZero;
  }
  return gf_alpha_pow(static_cast<long long>(kTables.log[a.value()]) * (e % kGroupOrder));
}

}  // namespace rs3127
