#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ulift/bigint.hpp"

namespace ulift {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

// Ascending primes with positive exponents.
struct Factorization {
  std::vector<PrimePower> factors;

  BigInt value() const {
    BigInt v = 1;
    for (auto const& f : factors) {
      v *= boost::multiprecision::pow(f.prime, f.exponent);
    }
    return v;
  }

  std::vector<BigInt> primes() const {
    std::vector<BigInt> out;
    for (auto const& f : factors) {
      out.push_back(f.prime);
    }
    return out;
  }
};

// Factorization is only attempted below this bound.
inline BigInt const& factorization_budget() {
  static BigInt const b = BigInt(1) << 96;
  return b;
}

namespace detail {

inline constexpr std::uint32_t kTrialLimit = 1'000'000;

inline std::vector<std::uint32_t> const& small_primes() {
  static std::vector<std::uint32_t> const primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) {
        continue;
      }
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialLimit; j += i) {
        sieve[j] = false;
      }
    }
    return out;
  }();
  return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) {
      r = mulmod64(r, b, m);
    }
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool strong_probable_prime64(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod64(a % n, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  for (int r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) {
      return true;
    }
  }
  return false;
}

inline bool is_prime64(u64 n) {
  if (n < 2) {
    return false;
  }
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) {
      return n == p;
    }
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime64(n, a)) {
      return false;
    }
  }
  return true;
}

inline bool strong_probable_prime(BigInt const& n, BigInt const& a) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  BigInt x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) {
      return true;
    }
  }
  return false;
}

inline int jacobi(BigInt a, BigInt n) {
  a = mod(a, n);
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) {
        t = -t;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      t = -t;
    }
    a %= n;
  }
  return n == 1 ? t : 0;
}

inline bool is_square(BigInt const& n) {
  if (n < 0) {
    return false;
  }
  BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

// Strong Lucas test with Selfridge parameters.
inline bool strong_lucas_probable_prime(BigInt const& n) {
  if (is_square(n)) {
    return false;
  }
  BigInt D = 5;
  while (true) {
    int j = jacobi(D, n);
    if (j == -1) {
      break;
    }
    if (j == 0 && abs(D) != n) {
      return false;
    }
    D = D > 0 ? BigInt(-D - 2) : BigInt(-D + 2);
  }
  BigInt P = 1;
  BigInt Q = (1 - D) / 4;
  BigInt d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto half = [&](BigInt x) {
    if ((x & 1) != 0) {
      x += n;
    }
    return mod(x / 2, n);
  };
  BigInt U = 1, V = P, Qk = mod(Q, n);
  unsigned bits = static_cast<unsigned>(msb(d));
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    U = mod(U * V, n);
    V = mod(V * V - 2 * Qk, n);
    Qk = mod(Qk * Qk, n);
    if (bit_test(d, static_cast<unsigned>(i))) {
      BigInt U2 = half(P * U + V);
      BigInt V2 = half(D * U + P * V);
      U = U2;
      V = V2;
      Qk = mod(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) {
    return true;
  }
  for (unsigned r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk, n);
    if (V == 0) {
      return true;
    }
    Qk = mod(Qk * Qk, n);
  }
  return false;
}

inline u64 pollard_brent64(u64 n, u64 c) {
  auto f = [&](u64 x) { return (mulmod64(x, x, n) + c) % n; };
  u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  constexpr u64 m = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) {
      y = f(y);
    }
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

inline BigInt pollard_brent(BigInt const& n, BigInt const& c) {
  auto f = [&](BigInt const& x) { return (x * x + c) % n; };
  BigInt y = 2, x = 2, q = 1, g = 1, ys = 2;
  std::uint64_t r = 1;
  constexpr std::uint64_t m = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      y = f(y);
    }
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x - ys, n);
    } while (g == 1);
  }
  return g;
}

inline void split_composite(BigInt const& n, std::vector<BigInt>& out);

inline bool is_prime_impl(BigInt const& n);

inline BigInt find_factor(BigInt const& n) {
  for (unsigned c = 1;; ++c) {
    BigInt g;
    if (n <= std::numeric_limits<u64>::max()) {
      g = pollard_brent64(static_cast<u64>(n), c);
    } else {
      g = pollard_brent(n, c);
    }
    if (g != n && g != 1) {
      return g;
    }
  }
}

inline void split_composite(BigInt const& n, std::vector<BigInt>& out) {
  if (n == 1) {
    return;
  }
  if (is_prime_impl(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = find_factor(n);
  split_composite(d, out);
  split_composite(n / d, out);
}

inline bool is_prime_impl(BigInt const& n) {
  if (n < 2) {
    return false;
  }
  if (n <= std::numeric_limits<u64>::max()) {
    return is_prime64(static_cast<u64>(n));
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
    if (n % p == 0) {
      return false;
    }
  }
  return strong_probable_prime(n, 2) && strong_lucas_probable_prime(n);
}

}  // namespace detail

// Deterministic below 2^64, Baillie-PSW above.
inline bool is_prime(BigInt const& n) { return detail::is_prime_impl(n); }

inline Factorization factorize(BigInt const& m) {
  require(m >= 2, ErrorCode::OutOfRange,
          "factorize: argument must be at least 2, got " + to_string(m));
  require(m < factorization_budget(), ErrorCode::FactorizationBudgetExceeded,
          "factorize: " + to_string(m) + " exceeds the 2^96 budget");
  Factorization out;
  BigInt rest = m;
  for (std::uint32_t p : detail::small_primes()) {
    if (BigInt(p) * p > rest) {
      break;
    }
    if (rest % p != 0) {
      continue;
    }
    PrimePower pp{BigInt(p), 0};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
    }
    out.factors.push_back(pp);
  }
  if (rest == 1) {
    return out;
  }
  std::vector<BigInt> big;
  detail::split_composite(rest, big);
  std::sort(big.begin(), big.end());
  for (auto const& p : big) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](auto const& a, auto const& b) { return a.prime < b.prime; });
  return out;
}

}  // namespace ulift
