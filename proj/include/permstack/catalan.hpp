#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace permstack {

inline constexpr unsigned kMaxCatalanIndex = 30;

namespace detail {

constexpr std::array<std::uint64_t, kMaxCatalanIndex + 1> catalan_table() {
  std::array<std::uint64_t, kMaxCatalanIndex + 1> c{};
  c[0] = 1;
  // C_{m+1} = sum_{i=0}^{m} C_i C_{m-i}
  for (unsigned m = 0; m < kMaxCatalanIndex; ++m) {
    std::uint64_t s = 0;
    for (unsigned i = 0; i <= m; ++i) s += c[i] * c[m - i];
    c[m + 1] = s;
  }
  return c;
}

}  // namespace detail

inline constexpr auto kCatalan = detail::catalan_table();

constexpr std::uint64_t catalan(unsigned n) {
  if (n > kMaxCatalanIndex) throw std::overflow_error("catalan index beyond 64-bit safe range");
  return kCatalan[n];
}

constexpr std::uint64_t factorial(unsigned n) {
  if (n > 20) throw std::overflow_error("factorial beyond 64-bit range");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

static_assert(catalan(4) == 14);

}  // namespace permstack
