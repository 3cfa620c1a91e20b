#pragma once

#include <cstddef>
#include <optional>
#include <utility>

namespace formations {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// n = p^k with p prime, k >= 1.
inline std::optional<std::pair<std::size_t, std::size_t>> prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = n;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

}  // namespace formations
