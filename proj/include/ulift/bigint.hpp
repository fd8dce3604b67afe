#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ulift/error.hpp"

namespace ulift {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(BigInt const& x) { return x.str(); }

// Accepts an optional sign followed by decimal digits.
inline BigInt parse_bigint(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    i = 1;
  }
  require(i < s.size(), ErrorCode::MalformedInput,
          "empty integer literal '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    require(s[j] >= '0' && s[j] <= '9', ErrorCode::MalformedInput,
            "not a decimal integer: '" + std::string(s) + "'");
  }
  // A leading zero would select octal in the cpp_int constructor.
  while (i + 1 < s.size() && s[i] == '0') {
    ++i;
  }
  BigInt v(std::string(s.substr(i)));
  return s[0] == '-' ? BigInt(-v) : v;
}

inline BigInt abs(BigInt const& a) { return a < 0 ? BigInt(-a) : a; }

// Least nonnegative residue; n == 0 means no reduction.
inline BigInt mod(BigInt const& a, BigInt const& n) {
  if (n == 0) {
    return a;
  }
  BigInt m = abs(n);
  BigInt r = a % m;
  if (r < 0) {
    r += m;
  }
  return r;
}

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline BigInt gcd(std::span<BigInt const> xs) {
  BigInt g = 0;
  for (auto const& x : xs) {
    g = gcd(g, x);
    if (g == 1) {
      break;
    }
  }
  return g;
}

struct Egcd {
  BigInt g;
  BigInt x;
  BigInt y;
};

// g = x*a + y*b with g >= 0; egcd(0, 0) = (0, 0, 0).
inline Egcd egcd(BigInt const& a, BigInt const& b) {
  if (a == 0 && b == 0) {
    return {0, 0, 0};
  }
  BigInt r0 = abs(a), r1 = abs(b);
  BigInt s0 = 1, s1 = 0;
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a < 0) {
    s0 = -s0;
  }
  if (b < 0) {
    t0 = -t0;
  }
  return {r0, s0, t0};
}

// Bezout coefficients for a whole list: sum c_i x_i = gcd(x).
inline std::pair<BigInt, std::vector<BigInt>> egcd_list(
    std::span<BigInt const> xs) {
  std::vector<BigInt> c(xs.size(), BigInt(0));
  BigInt g = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0) {
      continue;
    }
    Egcd e = egcd(g, xs[i]);
    for (std::size_t j = 0; j < i; ++j) {
      c[j] *= e.x;
    }
    c[i] = e.y;
    g = e.g;
  }
  return {g, c};
}

inline BigInt pow_mod(BigInt const& base, BigInt const& exp,
                      BigInt const& n) {
  if (n == 1) {
    return 0;
  }
  return boost::multiprecision::powm(mod(base, n), exp, n);
}

// A principal ideal nZ, stored by its nonnegative generator.  The zero
// ideal is representable so exact predicates can share the signature.
class Ideal {
 public:
  Ideal() : n_(1) {}
  Ideal(BigInt n) : n_(abs(n)) {}  // NOLINT(runtime/explicit)
  template <std::integral T>
  Ideal(T n) : n_(abs(BigInt(n))) {}  // NOLINT(runtime/explicit)

  static Ideal unit() { return Ideal(1); }
  static Ideal zero() { return Ideal(0); }

  BigInt const& modulus() const noexcept { return n_; }
  bool is_unit() const noexcept { return n_ == 1; }
  bool is_zero() const noexcept { return n_ == 0; }
  BigInt reduce(BigInt const& a) const { return mod(a, n_); }
  bool contains(BigInt const& a) const {
    return n_ == 0 ? a == 0 : a % n_ == 0;
  }

  friend bool operator==(Ideal const&, Ideal const&) = default;

 private:
  BigInt n_;
};

inline Ideal operator*(Ideal const& a, Ideal const& b) {
  return Ideal(a.modulus() * b.modulus());
}

inline Ideal product(std::span<Ideal const> ideals) {
  BigInt p = 1;
  for (auto const& i : ideals) {
    p *= i.modulus();
  }
  return Ideal(p);
}

inline void require_nonzero(Ideal const& n, char const* where) {
  require(!n.is_zero(), ErrorCode::OutOfRange,
          std::string(where) + ": zero ideal not allowed");
}

inline bool is_unit_mod(BigInt const& a, Ideal const& n) {
  return gcd(a, n.modulus()) == 1;
}

inline BigInt mod_inverse(BigInt const& a, Ideal const& n) {
  require_nonzero(n, "mod_inverse");
  if (n.is_unit()) {
    return 0;
  }
  Egcd e = egcd(a, n.modulus());
  require(e.g == 1, ErrorCode::NotAUnit,
          to_string(a) + " is not a unit modulo " + to_string(n.modulus()));
  return mod(e.x, n.modulus());
}

inline bool pairwise_coprime(std::span<Ideal const> ideals) {
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (gcd(ideals[i].modulus(), ideals[j].modulus()) != 1) {
        return false;
      }
    }
  }
  return true;
}

// Least x >= 0 with x = r_i mod n_i for all i.
inline BigInt crt_list(std::span<BigInt const> residues,
                       std::span<Ideal const> moduli) {
  require(residues.size() == moduli.size(), ErrorCode::DimensionMismatch,
          "crt_list: residue and modulus counts differ");
  for (auto const& m : moduli) {
    require_nonzero(m, "crt_list");
  }
  require(pairwise_coprime(moduli), ErrorCode::NonCoprimeModuli,
          "crt_list: moduli are not pairwise coprime");
  BigInt x = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    BigInt const& ni = moduli[i].modulus();
    if (ni == 1) {
      continue;
    }
    // x + m*s = r_i (mod n_i)
    BigInt s = mod((residues[i] - x) * mod_inverse(m, ni), ni);
    x += m * s;
    m *= ni;
  }
  return mod(x, m);
}

inline BigInt crt_pair(BigInt const& r1, Ideal const& n1, BigInt const& r2,
                       Ideal const& n2) {
  BigInt rs[2] = {r1, r2};
  Ideal ns[2] = {n1, n2};
  return crt_list(rs, ns);
}

}  // namespace ulift
