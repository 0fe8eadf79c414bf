#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hgs::nt {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1u) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1u;
  }
  return r;
}

/// (p, k) with n = p^k for a prime p, or nullopt.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n != 1) return std::nullopt;
    return std::pair{static_cast<unsigned>(p), k};
  }
  return std::nullopt;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

/// Least k >= 1 with a^k = 1 mod m; requires gcd(a, m) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
  }
  return k;
}

/// Smallest generator of (Z/p^2Z)^*; for odd p it generates (Z/p^nZ)^* for every n.
inline std::uint64_t primitive_root_mod_p2(std::uint64_t p) {
  std::uint64_t m = p * p;
  std::uint64_t target = p * (p - 1);
  for (std::uint64_t g = 2; g < m; ++g)
    if (g % p != 0 && multiplicative_order(g, m) == target) return g;
  return 1;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  return mod_pow(a, euler_phi(m) - 1, m);
}

}  // namespace hgs::nt
