#ifndef NILREP_LINALG_HPP
#define NILREP_LINALG_HPP

#include "nilrep/rational.hpp"

#include <optional>
#include <vector>

namespace nilrep {

/// Dense matrix over Rat, row-major. Sized at construction; all arithmetic
/// is exact.
class QMat {
public:
  QMat() : m_rows(0), m_cols(0) {}
  QMat(size_t rows, size_t cols) : m_rows(rows), m_cols(cols), m_a(rows * cols, Rat(0)) {}

  static QMat identity(size_t n);
  /// Rows are taken as given (each must have the same size).
  static QMat from_rows(const std::vector<QVec>& rows, size_t cols);

  size_t rows() const { return m_rows; }
  size_t cols() const { return m_cols; }

  Rat& at(size_t i, size_t j) { return m_a[i * m_cols + j]; }
  const Rat& at(size_t i, size_t j) const { return m_a[i * m_cols + j]; }

  QVec row(size_t i) const;
  QVec col(size_t j) const;
  void set_row(size_t i, const QVec& v);

  bool is_zero() const;
  bool operator==(const QMat& o) const { return m_rows == o.m_rows && m_cols == o.m_cols && m_a == o.m_a; }
  bool operator!=(const QMat& o) const { return !(*this == o); }

  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const QMat& o) const;
  QMat operator*(const Rat& c) const;
  QVec apply(const QVec& v) const; // matrix * column vector
  QMat transpose() const;

  /// Flattens row-major into a vector of length rows*cols.
  QVec vec() const { return m_a; }

private:
  size_t m_rows, m_cols;
  QVec m_a;
};

/// Commutator A*B - B*A.
QMat commutator(const QMat& a, const QMat& b);

struct RrefResult {
  QMat mat;                   // reduced row echelon form
  std::vector<size_t> pivots; // pivot column per nonzero row
};

/// Gauss-Jordan over Rat. Deterministic: first nonzero entry in each
/// column, scanning top to bottom, becomes the pivot.
RrefResult rref(QMat a);

/// Canonical subspace of Q^ambient: basis rows kept in reduced row
/// echelon form, so equal subspaces compare equal componentwise.
class Subspace {
public:
  Subspace() : m_ambient(0) {}

  static Subspace zero(size_t ambient);
  static Subspace full(size_t ambient);
  /// Span of the given rows (each of length ambient).
  static Subspace span(const std::vector<QVec>& rows, size_t ambient);
  static Subspace span(const QMat& rows);

  size_t ambient() const { return m_ambient; }
  size_t dim() const { return m_basis.rows(); }
  const QMat& basis() const { return m_basis; }
  QVec basis_row(size_t i) const { return m_basis.row(i); }
  const std::vector<size_t>& pivots() const { return m_pivots; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Coordinates of v in the basis rows, if v lies in the subspace.
  std::optional<QVec> coordinates(const QVec& v) const;

private:
  size_t m_ambient;
  QMat m_basis;
  std::vector<size_t> m_pivots;
};

/// Right null space { v : a v = 0 } as a canonical Subspace.
Subspace kernel(const QMat& a);

Subspace sum(const Subspace& a, const Subspace& b);

/// Intersection via dual constraints: each operand is rewritten as the
/// kernel of its annihilator and the stacked system is solved.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Direct complement U of w inside s (pre: w contained in s): scans the
/// echelon basis of s in pivot order and keeps rows independent from w.
/// Deterministic; returns U with U + w = s and U meet w = 0.
Subspace complement_avoiding(const Subspace& s, const Subspace& w);

/// Solves basis_rows^T x = v, i.e. writes v as a combination of the rows.
std::optional<QVec> solve_combination(const QMat& rows, const QVec& v);

} // namespace nilrep

#endif
