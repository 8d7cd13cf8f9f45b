// Exact linear algebra over cyclotomic numbers: reduced row echelon forms,
// kernels, subspaces with canonical bases.

#ifndef HOPFCAT_LINALG_HPP_
#define HOPFCAT_LINALG_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace hopfcat {

using Vec = std::vector<CycloNumber>;

inline bool is_zero_vec(const Vec& v) {
  for (const CycloNumber& x : v)
    if (!x.is_zero())
      return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Vec& a, const CycloNumber& s) {
  Vec r(a.size());
  if (s.is_zero())
    return r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      r[i] = a[i] * s;
  return r;
}

// y += s * x
inline void axpy(Vec& y, const CycloNumber& s, const Vec& x) {
  if (s.is_zero())
    return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      y[i] += s * x[i];
}

inline CycloNumber dot(const Vec& a, const Vec& b) {
  CycloNumber s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero())
      s += a[i] * b[i];
  return s;
}

inline bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return false;
  return true;
}

// Incrementally maintained reduced row echelon form.  Rows are kept sorted by
// pivot column, each pivot is 1, and pivot columns are zero in every other row.
class Echelon {
public:
  explicit Echelon(std::size_t ncols = 0) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Residual of v after elimination by the current rows.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const CycloNumber& c = v[pivots_[r]];
      if (!c.is_zero()) {
        CycloNumber f = c;
        axpy(v, -f, rows_[r]);
      }
    }
    return v;
  }

  // Coordinates of v on the rows, or false if v is not in the span.
  bool coordinates(const Vec& v, Vec& coords) const {
    Vec res = reduce(v);
    if (!is_zero_vec(res))
      return false;
    coords.assign(rows_.size(), CycloNumber());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      coords[r] = v[pivots_[r]];
    return true;
  }

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  // Returns true if the rank grew.
  bool add(Vec v) {
    if (v.size() != ncols_)
      throw PreconditionViolated("echelon row length mismatch");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ncols_ && v[p].is_zero())
      ++p;
    if (p == ncols_)
      return false;
    CycloNumber inv = v[p].inverse();
    for (std::size_t j = p; j < ncols_; ++j)
      if (!v[j].is_zero())
        v[j] *= inv;
    for (Vec& row : rows_) {
      if (!row[p].is_zero()) {
        CycloNumber f = row[p];
        axpy(row, -f, v);
      }
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p)
      ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  bool full() const { return rows_.size() == ncols_; }

  // Basis of {x : row . x = 0 for all rows}.
  std::vector<Vec> kernel() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (std::size_t p : pivots_)
      is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (is_pivot[f])
        continue;
      Vec x(ncols_);
      x[f] = CycloNumber(1);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!rows_[r][f].is_zero())
          x[pivots_[r]] = -rows_[r][f];
      basis.push_back(std::move(x));
    }
    return basis;
  }

private:
  std::size_t ncols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// A subspace of k^n with its canonical (reduced echelon) basis, so equality of
// subspaces is equality of basis matrices.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ech_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    for (const Vec& v : vectors) {
      s.ech_.add(v);
      if (s.ech_.full())
        break;
    }
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      Vec v(ambient);
      v[i] = CycloNumber(1);
      s.ech_.add(std::move(v));
    }
    return s;
  }

  std::size_t ambient() const { return ech_.ncols(); }
  std::size_t dim() const { return ech_.rank(); }
  const std::vector<Vec>& basis() const { return ech_.rows(); }
  const std::vector<std::size_t>& pivots() const { return ech_.pivots(); }
  const Echelon& echelon() const { return ech_; }

  bool contains(const Vec& v) const { return ech_.contains(v); }
  bool coordinates(const Vec& v, Vec& c) const { return ech_.coordinates(v, c); }

  bool add(const Vec& v) { return ech_.add(v); }

  bool is_subspace_of(const Subspace& o) const {
    for (const Vec& v : basis())
      if (!o.contains(v))
        return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.dim() != b.dim())
      return false;
    if (a.pivots() != b.pivots())
      return false;
    for (std::size_t r = 0; r < a.dim(); ++r)
      if (!vec_equal(a.basis()[r], b.basis()[r]))
        return false;
    return true;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  // Linear functionals (as coefficient vectors) cutting out this subspace.
  std::vector<Vec> annihilator() const { return ech_.kernel(); }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const Vec& v : b.basis())
      s.ech_.add(v);
    return s;
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    std::vector<Vec> eqs = a.annihilator();
    std::size_t k = b.dim();
    // coefficients c with eqs . (sum c_i b_i) = 0
    Echelon sys(k);
    for (const Vec& e : eqs) {
      Vec row(k);
      for (std::size_t i = 0; i < k; ++i)
        row[i] = dot(e, b.basis()[i]);
      sys.add(std::move(row));
      if (sys.full())
        break;
    }
    std::vector<Vec> out;
    for (const Vec& c : sys.kernel()) {
      Vec v(b.ambient());
      for (std::size_t i = 0; i < k; ++i)
        axpy(v, c[i], b.basis()[i]);
      out.push_back(std::move(v));
    }
    return span(b.ambient(), out);
  }

private:
  Echelon ech_;
};

// Dense square matrix with row-major storage.
struct Matrix {
  std::size_t n = 0;
  std::vector<CycloNumber> a;

  Matrix() = default;
  explicit Matrix(std::size_t size) : n(size), a(size * size) {}

  static Matrix identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i)
      m(i, i) = CycloNumber(1);
    return m;
  }

  CycloNumber& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const CycloNumber& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  CycloNumber trace() const {
    CycloNumber t;
    for (std::size_t i = 0; i < n; ++i)
      t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k) {
        const CycloNumber& xik = x(i, k);
        if (xik.is_zero())
          continue;
        for (std::size_t j = 0; j < x.n; ++j)
          if (!y(k, j).is_zero())
            r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i)
      r.a[i] = x.a[i] + y.a[i];
    return r;
  }

  Matrix scaled(const CycloNumber& s) const {
    Matrix r(n);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero())
        r.a[i] = a[i] * s;
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.n == y.n && vec_equal(x.a, y.a);
  }

  bool is_zero() const { return is_zero_vec(a); }
};

// Solve the square system m x = b for the unique x; throws if singular.
class LinearSolver {
public:
  // rows[i] is the i-th row of the system matrix.
  explicit LinearSolver(const std::vector<Vec>& rows) : n_(rows.size()) {
    // Gauss-Jordan on [M | I] to get the inverse once.
    std::vector<Vec> aug(n_, Vec(2 * n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j)
        aug[i][j] = rows[i][j];
      aug[i][n_ + i] = CycloNumber(1);
    }
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = n_;
      for (std::size_t i = c; i < n_; ++i)
        if (!aug[i][c].is_zero()) {
          piv = i;
          break;
        }
      if (piv == n_) {
        singular_ = true;
        return;
      }
      std::swap(aug[c], aug[piv]);
      CycloNumber inv = aug[c][c].inverse();
      for (auto& x : aug[c])
        if (!x.is_zero())
          x *= inv;
      for (std::size_t i = 0; i < n_; ++i)
        if (i != c && !aug[i][c].is_zero()) {
          CycloNumber f = aug[i][c];
          axpy(aug[i], -f, aug[c]);
        }
    }
    inv_.assign(n_, Vec(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        inv_[i][j] = aug[i][n_ + j];
  }

  bool singular() const { return singular_; }

  Vec solve(const Vec& b) const {
    if (singular_)
      throw PreconditionViolated("singular system");
    Vec x(n_);
    for (std::size_t i = 0; i < n_; ++i)
      x[i] = dot(inv_[i], b);
    return x;
  }

private:
  std::size_t n_;
  bool singular_ = false;
  std::vector<Vec> inv_;
};

} // namespace hopfcat

#endif
