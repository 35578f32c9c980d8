// matrix.hpp — exact dense linear algebra over Q and F_p.  See LICENSE.
//
// Row-echelon rank with the deterministic first-nonzero pivot rule, in a
// serial reference version and an OpenMP version that parallelises the row
// updates; both produce identical results.  No floating point anywhere.
#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "dmw/bigint.hpp"

namespace dmw {

// ch = 0 selects the rationals, otherwise a prime field F_ch.
struct FieldSpec {
  long ch = 0;
  bool is_rational() const { return ch == 0; }
  std::string name() const { return ch == 0 ? "Q" : "F" + std::to_string(ch); }
};

inline void validate_field(const FieldSpec& fs) {
  if (fs.ch == 0) return;
  if (fs.ch < 2 || !is_prime(fs.ch))
    throw std::invalid_argument("field characteristic must be 0 or a prime");
}

struct RationalField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_long(long v) const { return Rat(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Rat(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct PrimeField {
  long p = 2;
  using Elem = long;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long v) const {
    long r = v % p;
    return r < 0 ? r + p : r;
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended Euclid
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long q = r / nr;
      long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  bool is_zero(Elem a) const { return a == 0; }
  std::string to_string(Elem a) const { return std::to_string(a); }
};

template <class F>
struct Matrix {
  F field;
  size_t rows = 0, cols = 0;
  std::vector<typename F::Elem> a;

  Matrix() = default;
  Matrix(F f, size_t r, size_t c)
      : field(f), rows(r), cols(c), a(r * c, f.zero()) {}

  typename F::Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
  const typename F::Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Integer matrices carry field-independent data (Gram matrices, permutation
// matrices of module actions) until a field is chosen.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<long> a;
  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  long& at(size_t i, size_t j) { return a[i * cols + j]; }
  long at(size_t i, size_t j) const { return a[i * cols + j]; }
};

template <class F>
Matrix<F> to_field_matrix(const IntMatrix& m, F field) {
  Matrix<F> out(field, m.rows, m.cols);
  for (size_t i = 0; i < m.rows * m.cols; ++i) out.a[i] = field.from_long(m.a[i]);
  return out;
}

// Run fn with the concrete field selected by fs.  fn must be callable with
// both RationalField and PrimeField and return the same type.
template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
  validate_field(fs);
  if (fs.ch == 0) return fn(RationalField{});
  return fn(PrimeField{fs.ch});
}

// ---------------------------------------------------------------------------
// rank (row echelon, first-nonzero pivot)
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
size_t rank_echelon(Matrix<F>& m, bool parallel) {
  const size_t rows = m.rows, cols = m.cols;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = rows;
    for (size_t i = r; i < rows; ++i) {
      if (!m.field.is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (size_t j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const auto pinv = m.field.inv(m.at(r, c));
    if (parallel) {
#ifdef DMW_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (long i = static_cast<long>(r) + 1; i < static_cast<long>(rows); ++i) {
        auto si = static_cast<size_t>(i);
        if (m.field.is_zero(m.at(si, c))) continue;
        const auto f = m.field.mul(m.at(si, c), pinv);
        for (size_t j = c; j < cols; ++j)
          m.at(si, j) = m.field.sub(m.at(si, j), m.field.mul(f, m.at(r, j)));
      }
    } else {
      for (size_t i = r + 1; i < rows; ++i) {
        if (m.field.is_zero(m.at(i, c))) continue;
        const auto f = m.field.mul(m.at(i, c), pinv);
        for (size_t j = c; j < cols; ++j)
          m.at(i, j) = m.field.sub(m.at(i, j), m.field.mul(f, m.at(r, j)));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace detail

template <class F>
size_t rank_serial(Matrix<F> m) {
  return detail::rank_echelon(m, false);
}

template <class F>
size_t rank_parallel(Matrix<F> m) {
  return detail::rank_echelon(m, true);
}

template <class F>
size_t rank(const Matrix<F>& m, bool parallel = false) {
  Matrix<F> copy = m;
  return detail::rank_echelon(copy, parallel);
}

template <class F>
size_t nullspace_dim(const Matrix<F>& m, bool parallel = false) {
  return m.cols - rank(m, parallel);
}

template <class F>
bool is_invertible(const Matrix<F>& m, bool parallel = false) {
  if (m.rows != m.cols)
    throw std::invalid_argument("is_invertible: matrix is not square");
  return rank(m, parallel) == m.rows;
}

inline size_t rank_int(const IntMatrix& m, const FieldSpec& fs, bool parallel = false) {
  return with_field(fs, [&](auto field) {
    auto fm = to_field_matrix(m, field);
    return detail::rank_echelon(fm, parallel);
  });
}

// ---------------------------------------------------------------------------
// incremental row reduction (for large homogeneous equation systems)
// ---------------------------------------------------------------------------

// Maintains a reduced row-echelon basis; rows are fed one at a time.  Used
// for the homomorphism/extension equation systems, which have many more
// equations than variables: the caller can stop feeding once the rank
// saturates.
template <class F>
class RowReducer {
 public:
  RowReducer(F field, size_t nvars) : field_(field), nvars_(nvars) {}

  size_t nvars() const { return nvars_; }
  size_t rank() const { return basis_.size(); }
  bool saturated() const { return basis_.size() == nvars_; }

  // Returns true if the row was independent of the basis.
  bool add_row(std::vector<typename F::Elem> row) {
    if (row.size() != nvars_)
      throw std::invalid_argument("RowReducer: row width mismatch");
    // reduce against the basis
    for (size_t b = 0; b < basis_.size(); ++b) {
      const size_t p = pivot_[b];
      if (field_.is_zero(row[p])) continue;
      const auto f = row[p];
      for (size_t j = 0; j < nvars_; ++j)
        row[j] = field_.sub(row[j], field_.mul(f, basis_[b][j]));
    }
    size_t p = nvars_;
    for (size_t j = 0; j < nvars_; ++j) {
      if (!field_.is_zero(row[j])) {
        p = j;
        break;
      }
    }
    if (p == nvars_) return false;
    // normalise and back-eliminate to keep the basis fully reduced
    const auto inv = field_.inv(row[p]);
    for (size_t j = 0; j < nvars_; ++j) row[j] = field_.mul(row[j], inv);
    for (size_t b = 0; b < basis_.size(); ++b) {
      if (field_.is_zero(basis_[b][p])) continue;
      const auto f = basis_[b][p];
      for (size_t j = 0; j < nvars_; ++j)
        basis_[b][j] = field_.sub(basis_[b][j], field_.mul(f, row[j]));
    }
    basis_.push_back(std::move(row));
    pivot_.push_back(p);
    return true;
  }

 private:
  F field_;
  size_t nvars_;
  std::vector<std::vector<typename F::Elem>> basis_;
  std::vector<size_t> pivot_;
};

// ---------------------------------------------------------------------------
// import/export
// ---------------------------------------------------------------------------

// "rows cols" on the first line, then row-major entries separated by spaces;
// rationals as a/b when the denominator is not 1.
template <class F>
void dump_matrix(const Matrix<F>& m, std::ostream& os) {
  os << m.rows << ' ' << m.cols << '\n';
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) {
      if (j) os << ' ';
      os << m.field.to_string(m.at(i, j));
    }
    os << '\n';
  }
}

inline void dump_matrix_int(const IntMatrix& m, std::ostream& os) {
  os << m.rows << ' ' << m.cols << '\n';
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
}

}  // namespace dmw
