#ifndef LARGESUB_SRC_NUMBERS_HPP
#define LARGESUB_SRC_NUMBERS_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace largesub {

// (prime, exponent) pairs in ascending prime order.
inline std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline std::size_t smallest_prime_factor(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

inline bool is_prime(std::size_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

// Largest power of p dividing n.
inline std::size_t prime_part(std::size_t n, std::size_t p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

// k with p^k == n (n a power of p).
inline std::size_t integer_log(std::size_t n, std::size_t p) {
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace largesub

#endif  // LARGESUB_SRC_NUMBERS_HPP
