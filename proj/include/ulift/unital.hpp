#pragma once

#include <optional>
#include <vector>

#include "ulift/bigint.hpp"
#include "ulift/primes.hpp"

namespace ulift {

// result = entries[pivot] + sum_j coefficients[j] * (other entries, in order).
struct ShiftWitness {
  std::vector<BigInt> coefficients;
  BigInt result;
  Ideal modulus;
};

inline bool is_unital(std::span<BigInt const> entries) {
  return gcd(entries) == 1;
}

inline bool is_unital_mod(std::span<BigInt const> entries, Ideal const& n) {
  BigInt g = n.modulus();
  for (auto const& x : entries) {
    g = gcd(g, x);
  }
  return g == 1;
}

// Some n0 >= 0 with gcd(a + n0*b, m) = 1, found prime by prime via CRT.
inline BigInt coprime_shift(BigInt const& a, BigInt const& b,
                            BigInt const& m) {
  require(m != 0, ErrorCode::PreconditionViolated,
          "coprime_shift: modulus must be nonzero");
  require(gcd(a, b) == 1, ErrorCode::PreconditionViolated,
          "coprime_shift: gcd(a, b) must be 1");
  BigInt am = abs(m);
  if (gcd(a, am) == 1) {
    return 0;
  }
  std::vector<BigInt> residues;
  std::vector<Ideal> moduli;
  for (auto const& pp : factorize(am).factors) {
    BigInt const& q = pp.prime;
    if (b % q == 0) {
      continue;
    }
    // a + n0*b vanishes mod q only at n0 = t_q.
    BigInt t = mod(-a * mod_inverse(b, q), q);
    residues.push_back(mod(t + 1, q));
    moduli.emplace_back(q);
  }
  return crt_list(residues, moduli);
}

// entries unital over Z; result = a_1 + sum c_j a_j is a unit mod target.
inline ShiftWitness usc_shift(std::span<BigInt const> entries,
                              Ideal const& target) {
  require(entries.size() >= 2, ErrorCode::PreconditionViolated,
          "usc_shift: need at least two entries");
  require_nonzero(target, "usc_shift");
  require(is_unital(entries), ErrorCode::PreconditionViolated,
          "usc_shift: entries are not unital");
  auto [d, bezout] = egcd_list(entries.subspan(1));
  BigInt n0 = coprime_shift(entries[0], d, target.modulus());
  ShiftWitness w;
  w.modulus = target;
  w.result = entries[0] + n0 * d;
  for (auto& c : bezout) {
    w.coefficients.push_back(n0 * c);
  }
  return w;
}

// entries unital mod target; same output contract as usc_shift.
inline ShiftWitness usc_shift_mod(std::span<BigInt const> entries,
                                  Ideal const& target) {
  require(!entries.empty(), ErrorCode::PreconditionViolated,
          "usc_shift_mod: no entries");
  require_nonzero(target, "usc_shift_mod");
  require(is_unital_mod(entries, target), ErrorCode::PreconditionViolated,
          "usc_shift_mod: entries are not unital modulo the target");
  ShiftWitness w;
  w.modulus = target;
  w.coefficients.assign(entries.size() - 1, BigInt(0));
  w.result = entries[0];
  if (is_unit_mod(entries[0], target)) {
    return w;
  }
  // Adjoin t in target*Z so the extended list is unital over Z.
  std::vector<BigInt> ext(entries.begin(), entries.end());
  ext.push_back(target.modulus());
  auto [g, bez] = egcd_list(ext);
  ensure(g == 1, "usc_shift_mod: extended list not unital");
  ext.back() = bez.back() * target.modulus();
  if (ext.back() == 0) {
    ext.back() = target.modulus();
  }
  ShiftWitness inner = usc_shift(ext, target);
  BigInt const& n = target.modulus();
  for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
    w.coefficients[j] = mod(inner.coefficients[j], n);
    w.result += w.coefficients[j] * entries[j + 1];
  }
  ensure(is_unit_mod(w.result, target), "usc_shift_mod: result not a unit");
  return w;
}

struct CmhWitness {
  std::size_t unit_index = 0;
  std::vector<BigInt> multipliers;  // sum a_j x_j = 1 - t'
  BigInt t_prime;
  std::vector<BigInt> t;
};

inline CmhWitness cmh_witness(std::span<BigInt const> x, Ideal const& ideal) {
  require(x.size() >= 2, ErrorCode::PreconditionViolated,
          "cmh_perturb: need at least two entries");
  require_nonzero(ideal, "cmh_perturb");
  require(is_unital_mod(x, ideal), ErrorCode::PreconditionViolated,
          "cmh_perturb: entries are not unital modulo the ideal");
  std::optional<std::size_t> u;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_unit_mod(x[i], ideal)) {
      u = i;
      break;
    }
  }
  require(u.has_value(), ErrorCode::PreconditionViolated,
          "cmh_perturb: no entry is a unit modulo the ideal");
  CmhWitness w;
  w.unit_index = *u;
  w.multipliers.assign(x.size(), BigInt(0));
  w.t.assign(x.size(), BigInt(0));
  std::size_t partner = *u == 0 ? 1 : 0;
  BigInt a = mod_inverse(x[*u], ideal);
  BigInt t = 1 - a * x[*u];
  w.multipliers[*u] = a;
  w.multipliers[partner] = t;
  BigInt s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    s += w.multipliers[j] * x[j];
  }
  w.t_prime = 1 - s;
  ensure(ideal.contains(w.t_prime), "cmh_perturb: t' outside the ideal");
  auto [g, b] = egcd_list(w.multipliers);
  ensure(g == 1, "cmh_perturb: multipliers not unital");
  // Already unital: the identity perturbation suffices.
  if (is_unital(x)) {
    return w;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    w.t[j] = w.t_prime * b[j];
  }
  return w;
}

// t with entries in the ideal such that x + t is unital over Z.
inline std::vector<BigInt> cmh_perturb(std::span<BigInt const> x,
                                       Ideal const& ideal) {
  return cmh_witness(x, ideal).t;
}

// Shift row[pivot] by an n-combination of the other entries, with
// coefficients in coeff_ideal, into a unit mod target.
inline ShiftWitness bring_unit(std::span<BigInt const> row, std::size_t pivot,
                               Ideal const& target, Ideal const& coeff_ideal) {
  require(pivot < row.size(), ErrorCode::OutOfRange,
          "bring_unit: pivot out of range");
  require_nonzero(target, "bring_unit");
  require_nonzero(coeff_ideal, "bring_unit");
  require(gcd(target.modulus(), coeff_ideal.modulus()) == 1,
          ErrorCode::PreconditionViolated,
          "bring_unit: target and coefficient ideals are not coprime");
  require(is_unital_mod(row, target), ErrorCode::PreconditionViolated,
          "bring_unit: row is not unital modulo the target");
  ShiftWitness w;
  w.modulus = target;
  w.result = row[pivot];
  w.coefficients.assign(row.size() - 1, BigInt(0));
  if (is_unit_mod(row[pivot], target)) {
    return w;
  }
  std::vector<BigInt> reordered;
  reordered.push_back(row[pivot]);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != pivot) {
      reordered.push_back(row[j]);
    }
  }
  ShiftWitness y = usc_shift_mod(reordered, target);
  // q2 = 1 mod target, q2 = 0 mod coeff_ideal.
  Ideal both = target * coeff_ideal;
  BigInt q2 = crt_pair(1, target, 0, coeff_ideal);
  for (std::size_t j = 0; j + 1 < row.size(); ++j) {
    w.coefficients[j] = mod(q2 * y.coefficients[j], both.modulus());
    w.result += w.coefficients[j] * reordered[j + 1];
  }
  ensure(is_unit_mod(w.result, target), "bring_unit: result not a unit");
  return w;
}

// Units d_i with d_i = a_i mod I_i and prod d_i = 1 mod prod I_i.
inline std::vector<BigInt> diag_det_one(std::span<BigInt const> a,
                                        std::span<Ideal const> moduli) {
  require(!a.empty(), ErrorCode::PreconditionViolated,
          "diag_det_one: empty input");
  require(a.size() == moduli.size(), ErrorCode::DimensionMismatch,
          "diag_det_one: value and modulus counts differ");
  for (auto const& m : moduli) {
    require_nonzero(m, "diag_det_one");
  }
  require(pairwise_coprime(moduli), ErrorCode::NonCoprimeModuli,
          "diag_det_one: moduli are not pairwise coprime");
  std::vector<std::size_t> proper;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!moduli[i].is_unit()) {
      require(is_unit_mod(a[i], moduli[i]), ErrorCode::NotAUnit,
              "diag_det_one: " + to_string(a[i]) + " is not a unit modulo " +
                  to_string(moduli[i].modulus()));
      proper.push_back(i);
    }
  }
  std::vector<BigInt> d(a.size(), BigInt(1));
  if (proper.empty()) {
    return d;
  }
  if (proper.size() == 1) {
    std::size_t p = proper[0];
    d[p] = moduli[p].reduce(a[p]);
    if (d[p] == 1) {
      return d;
    }
    std::size_t slot = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != p) {
        slot = i;
        break;
      }
    }
    require(slot < a.size(), ErrorCode::PreconditionViolated,
            "diag_det_one: a single non-identity entry cannot have product 1");
    d[slot] = mod_inverse(a[p], moduli[p]);
    return d;
  }
  std::vector<Ideal> ms;
  std::vector<BigInt> inv;
  for (std::size_t i : proper) {
    ms.push_back(moduli[i]);
    inv.push_back(mod_inverse(a[i], moduli[i]));
  }
  std::size_t r = proper.size();
  for (std::size_t pi = 0; pi < r; ++pi) {
    std::vector<BigInt> res(r, BigInt(1));
    res[pi] = a[proper[pi]];
    if (pi == 0) {
      for (std::size_t j = 1; j < r; ++j) {
        res[j] = inv[j];
      }
    } else if (pi == 1) {
      res[0] = inv[0];
    }
    d[proper[pi]] = crt_list(res, ms);
  }
  return d;
}

}  // namespace ulift
