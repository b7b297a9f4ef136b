#include "nilrep/linalg.hpp"

#include "nilrep/errors.hpp"

namespace nilrep {

QMat QMat::identity(size_t n) {
  QMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, size_t cols) {
  QMat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("BadShape", "row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

QVec QMat::row(size_t i) const {
  QVec v(m_cols);
  for (size_t j = 0; j < m_cols; ++j) v[j] = at(i, j);
  return v;
}

QVec QMat::col(size_t j) const {
  QVec v(m_rows);
  for (size_t i = 0; i < m_rows; ++i) v[i] = at(i, j);
  return v;
}

void QMat::set_row(size_t i, const QVec& v) {
  for (size_t j = 0; j < m_cols; ++j) at(i, j) = v[j];
}

bool QMat::is_zero() const {
  for (const Rat& x : m_a)
    if (x != 0) return false;
  return true;
}

QMat QMat::operator+(const QMat& o) const {
  if (m_rows != o.m_rows || m_cols != o.m_cols) throw Error("BadShape", "add shape mismatch");
  QMat r(m_rows, m_cols);
  for (size_t k = 0; k < m_a.size(); ++k) r.m_a[k] = m_a[k] + o.m_a[k];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (m_rows != o.m_rows || m_cols != o.m_cols) throw Error("BadShape", "sub shape mismatch");
  QMat r(m_rows, m_cols);
  for (size_t k = 0; k < m_a.size(); ++k) r.m_a[k] = m_a[k] - o.m_a[k];
  return r;
}

QMat QMat::operator*(const QMat& o) const {
  if (m_cols != o.m_rows) throw Error("BadShape", "mul shape mismatch");
  QMat r(m_rows, o.m_cols);
  for (size_t i = 0; i < m_rows; ++i)
    for (size_t k = 0; k < m_cols; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < o.m_cols; ++j) {
        const Rat& bkj = o.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

QMat QMat::operator*(const Rat& c) const {
  QMat r(m_rows, m_cols);
  for (size_t k = 0; k < m_a.size(); ++k) r.m_a[k] = m_a[k] * c;
  return r;
}

QVec QMat::apply(const QVec& v) const {
  if (m_cols != v.size()) throw Error("BadShape", "apply shape mismatch");
  QVec r(m_rows, Rat(0));
  for (size_t i = 0; i < m_rows; ++i)
    for (size_t j = 0; j < m_cols; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

QMat QMat::transpose() const {
  QMat r(m_cols, m_rows);
  for (size_t i = 0; i < m_rows; ++i)
    for (size_t j = 0; j < m_cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

RrefResult rref(QMat a) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && a.at(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    Rat inv = Rat(1) / a.at(row, col);
    for (size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

Subspace Subspace::zero(size_t ambient) {
  Subspace s;
  s.m_ambient = ambient;
  s.m_basis = QMat(0, ambient);
  return s;
}

Subspace Subspace::full(size_t ambient) { return span(QMat::identity(ambient)); }

Subspace Subspace::span(const std::vector<QVec>& rows, size_t ambient) {
  return span(QMat::from_rows(rows, ambient));
}

Subspace Subspace::span(const QMat& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.m_ambient = rows.cols();
  s.m_pivots = r.pivots;
  s.m_basis = QMat(r.pivots.size(), rows.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) s.m_basis.set_row(i, r.mat.row(i));
  return s;
}

bool Subspace::contains(const QVec& v) const {
  if (v.size() != m_ambient) throw Error("BadShape", "ambient mismatch");
  QVec w = v;
  for (size_t r = 0; r < m_basis.rows(); ++r) {
    const Rat& c = w[m_pivots[r]];
    if (c != 0) {
      Rat f = c;
      for (size_t j = 0; j < m_ambient; ++j) w[j] -= f * m_basis.at(r, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.m_ambient != m_ambient) throw Error("BadShape", "ambient mismatch");
  for (size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return m_ambient == o.m_ambient && m_basis == o.m_basis;
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
  if (v.size() != m_ambient) throw Error("BadShape", "ambient mismatch");
  QVec w = v;
  QVec coeff(dim(), Rat(0));
  for (size_t r = 0; r < m_basis.rows(); ++r) {
    Rat c = w[m_pivots[r]];
    if (c != 0) {
      coeff[r] = c;
      for (size_t j = 0; j < m_ambient; ++j) w[j] -= c * m_basis.at(r, j);
    }
  }
  if (!is_zero(w)) return std::nullopt;
  return coeff;
}

Subspace kernel(const QMat& a) {
  RrefResult r = rref(a);
  const size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<QVec> out;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v(n, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    out.push_back(std::move(v));
  }
  return Subspace::span(out, n);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("BadShape", "ambient mismatch");
  std::vector<QVec> rows;
  for (size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_row(i));
  for (size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_row(i));
  return Subspace::span(rows, a.ambient());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("BadShape", "ambient mismatch");
  // rowspace(B) = null(K) where K spans null(B): stack both annihilators.
  Subspace ka = kernel(a.basis());
  Subspace kb = kernel(b.basis());
  std::vector<QVec> rows;
  for (size_t i = 0; i < ka.dim(); ++i) rows.push_back(ka.basis_row(i));
  for (size_t i = 0; i < kb.dim(); ++i) rows.push_back(kb.basis_row(i));
  return kernel(QMat::from_rows(rows, a.ambient()));
}

Subspace complement_avoiding(const Subspace& s, const Subspace& w) {
  if (s.ambient() != w.ambient()) throw Error("BadShape", "ambient mismatch");
  if (!s.contains(w)) throw Error("NotContained", "complement_avoiding: w not inside s");
  std::vector<QVec> acc;
  for (size_t i = 0; i < w.dim(); ++i) acc.push_back(w.basis_row(i));
  std::vector<QVec> chosen;
  size_t rank = w.dim();
  for (size_t i = 0; i < s.dim() && rank < s.dim(); ++i) {
    acc.push_back(s.basis_row(i));
    Subspace test = Subspace::span(acc, s.ambient());
    if (test.dim() > rank) {
      rank = test.dim();
      chosen.push_back(s.basis_row(i));
    } else {
      acc.pop_back();
    }
  }
  return Subspace::span(chosen, s.ambient());
}

std::optional<QVec> solve_combination(const QMat& rows, const QVec& v) {
  // Augment [rows^T | v] and solve by elimination.
  const size_t n = rows.cols(), m = rows.rows();
  if (v.size() != n) throw Error("BadShape", "solve shape mismatch");
  QMat aug(n, m + 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) aug.at(i, j) = rows.at(j, i);
    aug.at(i, m) = v[i];
  }
  RrefResult r = rref(aug);
  QVec x(m, Rat(0));
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m) return std::nullopt; // inconsistent system
    x[r.pivots[i]] = r.mat.at(i, m);
  }
  return x;
}

} // namespace nilrep
