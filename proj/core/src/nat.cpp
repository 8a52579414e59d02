#include "padic/nat.hpp"

namespace padic {

Nat balanced_product(std::vector<Nat> factors) {
  if (factors.empty()) return 1;
  while (factors.size() > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
      factors[out++] = factors[i] * factors[i + 1];
    if (factors.size() % 2 != 0) factors[out++] = std::move(factors.back());
    factors.resize(out);
  }
  return std::move(factors.front());
}

}  // namespace padic
