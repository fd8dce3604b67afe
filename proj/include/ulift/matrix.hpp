#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ulift/bigint.hpp"

namespace ulift {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (auto const& r : rows) {
      require(r.size() == cols_, ErrorCode::BadShape, "ragged matrix literal");
      for (long long x : r) {
        a_.emplace_back(x);
      }
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  static IntMatrix from_rows(std::vector<std::vector<BigInt>> const& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == c, ErrorCode::BadShape, "ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + i * c);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  BigInt const& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::span<BigInt> row(std::size_t i) {
    return {a_.data() + i * cols_, cols_};
  }
  std::span<BigInt const> row(std::size_t i) const {
    return {a_.data() + i * cols_, cols_};
  }
  std::vector<BigInt> column(std::size_t j) const {
    std::vector<BigInt> c;
    for (std::size_t i = 0; i < rows_; ++i) {
      c.push_back((*this)(i, j));
    }
    return c;
  }

  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        b(i, j) = (*this)(r0 + i, c0 + j);
      }
    }
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, IntMatrix const& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        (*this)(r0 + i, c0 + j) = b(i, j);
      }
    }
  }

  std::vector<BigInt> const& entries() const noexcept { return a_; }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

inline IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  require(a.cols() == b.rows(), ErrorCode::DimensionMismatch,
          "matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      BigInt const& x = a(i, l);
      if (x == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += x * b(l, j);
      }
    }
  }
  return c;
}

inline IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          ErrorCode::DimensionMismatch, "matrix sum: shapes differ");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) += b(i, j);
    }
  }
  return c;
}

inline IntMatrix operator-(IntMatrix const& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = -c(i, j);
    }
  }
  return c;
}

inline IntMatrix transpose(IntMatrix const& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      t(j, i) = a(i, j);
    }
  }
  return t;
}

inline IntMatrix mat_mod(IntMatrix const& a, Ideal const& n) {
  IntMatrix r = a;
  if (n.is_zero()) {
    return r;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r(i, j) = n.reduce(a(i, j));
    }
  }
  return r;
}

inline bool congruent(IntMatrix const& a, IntMatrix const& b,
                      Ideal const& n) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!n.contains(a(i, j) - b(i, j))) {
        return false;
      }
    }
  }
  return true;
}

// Fraction-free Gaussian elimination.
inline BigInt det(IntMatrix const& m) {
  require(m.is_square(), ErrorCode::NotSquare, "det: matrix is not square");
  std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline IntMatrix minor_matrix(IntMatrix const& m, std::size_t r,
                              std::size_t c) {
  std::size_t n = m.rows();
  IntMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == r) {
      continue;
    }
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == c) {
        continue;
      }
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

inline IntMatrix adjugate(IntMatrix const& m) {
  require(m.is_square(), ErrorCode::NotSquare,
          "adjugate: matrix is not square");
  std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt c = det(minor_matrix(m, i, j));
      adj(j, i) = (i + j) % 2 == 0 ? c : BigInt(-c);
    }
  }
  return adj;
}

namespace detail {

// Fraction-free Gauss-Jordan on [m | I]; returns (d, X) with m*X = d*I.
inline std::pair<BigInt, IntMatrix> scaled_inverse(IntMatrix const& m) {
  std::size_t n = m.rows();
  IntMatrix a(n, 2 * n);
  a.set_block(0, 0, m);
  a.set_block(0, n, IntMatrix::identity(n));
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      require(p < n, ErrorCode::NotUnimodular, "matrix is singular");
      for (std::size_t j = 0; j < 2 * n; ++j) {
        std::swap(a(k, j), a(p, j));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) {
        continue;
      }
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) {
          continue;
        }
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return {prev, a.block(0, n, n, n)};
}

}  // namespace detail

// Exact inverse of a matrix with determinant +-1.
inline IntMatrix inverse_unimodular(IntMatrix const& m) {
  require(m.is_square(), ErrorCode::NotSquare,
          "inverse: matrix is not square");
  std::size_t n = m.rows();
  if (n <= 6) {
    BigInt d = det(m);
    require(d == 1 || d == -1, ErrorCode::NotUnimodular,
            "inverse: determinant is " + to_string(d));
    IntMatrix adj = adjugate(m);
    return d == 1 ? adj : -adj;
  }
  auto [d, x] = detail::scaled_inverse(m);
  require(d == 1 || d == -1, ErrorCode::NotUnimodular,
          "inverse: determinant is " + to_string(d));
  return d == 1 ? x : -x;
}

struct SymplecticForm {
  std::size_t k = 1;

  IntMatrix materialize() const {
    IntMatrix j(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      j(i, k + i) = 1;
      j(k + i, i) = -1;
    }
    return j;
  }
};

// n = 0 asks for exact symplecticity.
inline bool is_symplectic(IntMatrix const& m, SymplecticForm const& form,
                          Ideal const& n) {
  if (m.rows() != 2 * form.k || m.cols() != 2 * form.k) {
    return false;
  }
  IntMatrix j = form.materialize();
  return congruent(transpose(m) * j * m, j, n);
}

inline bool is_symplectic(IntMatrix const& m, Ideal const& n = Ideal::zero()) {
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0) {
    return false;
  }
  return is_symplectic(m, SymplecticForm{m.rows() / 2}, n);
}

inline bool is_sl_mod(IntMatrix const& m, Ideal const& n) {
  return m.is_square() && n.contains(det(m) - 1);
}

// Exact inverse of an exactly symplectic matrix: -J m^T J.
inline IntMatrix symplectic_inverse(IntMatrix const& m) {
  IntMatrix j = SymplecticForm{m.rows() / 2}.materialize();
  return -(j * transpose(m) * j);
}

inline bool is_symmetric(IntMatrix const& s) {
  return s.is_square() && s == transpose(s);
}

// [[U, 0], [0, U^{-T}]]
inline IntMatrix embed_sl_pair_block(IntMatrix const& u) {
  require(u.is_square(), ErrorCode::NotSquare,
          "embed_sl_pair_block: matrix is not square");
  require(det(u) == 1, ErrorCode::NotUnimodular,
          "embed_sl_pair_block: determinant is not 1");
  std::size_t k = u.rows();
  IntMatrix g(2 * k, 2 * k);
  g.set_block(0, 0, u);
  g.set_block(k, k, transpose(inverse_unimodular(u)));
  return g;
}

// upper: [[I, S], [0, I]]; lower: [[I, 0], [S, I]].
inline IntMatrix embed_symmetric_shear(IntMatrix const& s, bool upper) {
  require(is_symmetric(s), ErrorCode::NotSymmetric,
          "embed_symmetric_shear: matrix is not symmetric");
  std::size_t k = s.rows();
  IntMatrix g = IntMatrix::identity(2 * k);
  g.set_block(upper ? 0 : k, upper ? k : 0, s);
  return g;
}

// Column i of the permutation matrix is e_{perm[i]}.
inline IntMatrix permutation_matrix(std::span<std::size_t const> perm) {
  std::size_t k = perm.size();
  std::vector<bool> seen(k, false);
  for (std::size_t p : perm) {
    require(p < k && !seen[p], ErrorCode::PreconditionViolated,
            "not a permutation");
    seen[p] = true;
  }
  IntMatrix p(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    p(perm[i], i) = 1;
  }
  return p;
}

enum class PermutationFlavor { diagonal, off_diagonal };

// diagonal: [[P, 0], [0, P]]; off_diagonal: [[0, P], [-P, 0]].
inline IntMatrix embed_sp_permutation(std::span<std::size_t const> perm,
                                      PermutationFlavor flavor) {
  IntMatrix p = permutation_matrix(perm);
  std::size_t k = perm.size();
  IntMatrix g(2 * k, 2 * k);
  if (flavor == PermutationFlavor::diagonal) {
    g.set_block(0, 0, p);
    g.set_block(k, k, p);
  } else {
    g.set_block(0, k, p);
    g.set_block(k, 0, -p);
  }
  return g;
}

// Embeds a 2x2 block at rows/cols (i, j) of an n x n identity.
inline IntMatrix embed_2x2(IntMatrix const& b, std::size_t n, std::size_t i,
                           std::size_t j) {
  IntMatrix g = IntMatrix::identity(n);
  g(i, i) = b(0, 0);
  g(i, j) = b(0, 1);
  g(j, i) = b(1, 0);
  g(j, j) = b(1, 1);
  return g;
}

struct ElementaryOp {
  enum class Kind {
    add_multiple_of_column,  // col_j += c * col_i, acts on the right
    add_multiple_of_row,     // row_i += c * row_j, acts on the left
    swap_with_sign,          // (i, j) block [[0, 1], [-1, 0]]
    scale_pair,              // diag(c, c^{-1}) at (i, j), c = +-1
  };

  Kind kind = Kind::add_multiple_of_column;
  std::size_t i = 0;
  std::size_t j = 0;
  BigInt coefficient = 0;

  static ElementaryOp add_column(std::size_t src, std::size_t dst,
                                 BigInt c) {
    return {Kind::add_multiple_of_column, src, dst, std::move(c)};
  }
  static ElementaryOp add_row(std::size_t dst, std::size_t src, BigInt c) {
    return {Kind::add_multiple_of_row, dst, src, std::move(c)};
  }

  bool acts_on_right() const { return kind != Kind::add_multiple_of_row; }

  IntMatrix materialize(std::size_t n) const {
    require(i < n && j < n && i != j, ErrorCode::OutOfRange,
            "elementary op: bad indices");
    IntMatrix e = IntMatrix::identity(n);
    switch (kind) {
      case Kind::add_multiple_of_column:
      case Kind::add_multiple_of_row:
        e(i, j) = coefficient;
        break;
      case Kind::swap_with_sign:
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = -1;
        break;
      case Kind::scale_pair:
        require(coefficient == 1 || coefficient == -1,
                ErrorCode::NotUnimodular, "scale_pair needs a unit of Z");
        e(i, i) = coefficient;
        e(j, j) = coefficient;
        break;
    }
    return e;
  }

  ElementaryOp inverse() const {
    ElementaryOp r = *this;
    switch (kind) {
      case Kind::add_multiple_of_column:
      case Kind::add_multiple_of_row:
        r.coefficient = -coefficient;
        break;
      case Kind::swap_with_sign:
        std::swap(r.i, r.j);
        break;
      case Kind::scale_pair:
        break;
    }
    return r;
  }

  // m <- m * E
  void apply_right(IntMatrix& m) const {
    switch (kind) {
      case Kind::add_multiple_of_column:
      case Kind::add_multiple_of_row:
        for (std::size_t r = 0; r < m.rows(); ++r) {
          m(r, j) += coefficient * m(r, i);
        }
        break;
      case Kind::swap_with_sign:
        for (std::size_t r = 0; r < m.rows(); ++r) {
          BigInt ci = m(r, i);
          m(r, i) = -m(r, j);
          m(r, j) = ci;
        }
        break;
      case Kind::scale_pair:
        for (std::size_t r = 0; r < m.rows(); ++r) {
          m(r, i) *= coefficient;
          m(r, j) *= coefficient;
        }
        break;
    }
  }

  // m <- E * m
  void apply_left(IntMatrix& m) const {
    switch (kind) {
      case Kind::add_multiple_of_column:
      case Kind::add_multiple_of_row:
        for (std::size_t c = 0; c < m.cols(); ++c) {
          m(i, c) += coefficient * m(j, c);
        }
        break;
      case Kind::swap_with_sign:
        for (std::size_t c = 0; c < m.cols(); ++c) {
          BigInt ri = m(i, c);
          m(i, c) = m(j, c);
          m(j, c) = -ri;
        }
        break;
      case Kind::scale_pair:
        for (std::size_t c = 0; c < m.cols(); ++c) {
          m(i, c) *= coefficient;
          m(j, c) *= coefficient;
        }
        break;
    }
  }

  // Applies on the side the kind names.
  void apply(IntMatrix& m) const {
    if (acts_on_right()) {
      apply_right(m);
    } else {
      apply_left(m);
    }
  }
};

}  // namespace ulift
