#include "nilrep/lie.hpp"

#include "nilrep/errors.hpp"

#include <algorithm>

namespace nilrep {

void LieAlgebra::set_bracket(size_t i, size_t j, QVec v) {
  if (i >= j) throw Error("BadBracket", "set_bracket requires i < j");
  if (j >= m_dim) throw Error("BadBracket", "basis index out of range");
  if (v.size() != m_dim) throw Error("BadShape", "bracket value length mismatch");
  if (is_zero(v))
    m_table.erase({i, j});
  else
    m_table[{i, j}] = std::move(v);
}

QVec LieAlgebra::bracket_basis(size_t i, size_t j) const {
  if (i == j) return zero_vec(m_dim);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = m_table.find({i, j});
  if (it == m_table.end()) return zero_vec(m_dim);
  QVec v = it->second;
  if (flip)
    for (Rat& x : v) x = -x;
  return v;
}

QVec LieAlgebra::bracket(const QVec& a, const QVec& b) const {
  QVec out = zero_vec(m_dim);
  for (const auto& [ij, v] : m_table) {
    Rat c = a[ij.first] * b[ij.second] - a[ij.second] * b[ij.first];
    if (c != 0) axpy(out, c, v);
  }
  return out;
}

QMat LieAlgebra::ad_basis(size_t i) const {
  QMat m(m_dim, m_dim);
  for (size_t j = 0; j < m_dim; ++j) {
    QVec v = bracket_basis(i, j);
    for (size_t k = 0; k < m_dim; ++k) m.at(k, j) = v[k];
  }
  return m;
}

QMat LieAlgebra::ad(const QVec& v) const {
  QMat m(m_dim, m_dim);
  for (size_t j = 0; j < m_dim; ++j) {
    QVec w = bracket(v, unit_vec(m_dim, j));
    for (size_t k = 0; k < m_dim; ++k) m.at(k, j) = w[k];
  }
  return m;
}

void validate(const LieAlgebra& L) {
  const size_t n = L.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        QVec s = L.bracket(L.bracket_basis(i, j), unit_vec(n, k));
        axpy(s, Rat(1), L.bracket(L.bracket_basis(j, k), unit_vec(n, i)));
        axpy(s, Rat(1), L.bracket(L.bracket_basis(k, i), unit_vec(n, j)));
        if (!is_zero(s))
          throw Error("JacobiViolation", "triple (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const size_t n = L.dim();
  std::vector<Subspace> series;
  if (n == 0) return series;
  Subspace cur = Subspace::full(n);
  series.push_back(cur);
  while (cur.dim() > 0) {
    std::vector<QVec> rows;
    for (size_t i = 0; i < n; ++i)
      for (size_t r = 0; r < cur.dim(); ++r) {
        QVec w = L.bracket(unit_vec(n, i), cur.basis_row(r));
        if (!is_zero(w)) rows.push_back(std::move(w));
      }
    Subspace next = Subspace::span(rows, n);
    if (next.dim() == cur.dim()) throw Error("NotNilpotent", "lower central series stabilizes above zero");
    if (next.dim() == 0) break;
    series.push_back(next);
    cur = next;
  }
  return series;
}

size_t nilpotency_class(const LieAlgebra& L) { return lower_central_series(L).size(); }

Subspace center(const LieAlgebra& L) {
  const size_t n = L.dim();
  if (n == 0) return Subspace::zero(0);
  QMat stacked(n * n, n);
  for (size_t i = 0; i < n; ++i) {
    QMat adi = L.ad_basis(i);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = adi.at(r, c);
  }
  return kernel(stacked);
}

Subspace derived(const LieAlgebra& L) {
  std::vector<QVec> rows;
  for (const auto& [ij, v] : L.table()) {
    (void)ij;
    rows.push_back(v);
  }
  return Subspace::span(rows, L.dim());
}

bool is_filiform(const LieAlgebra& L) {
  return L.dim() >= 3 && nilpotency_class(L) == L.dim() - 1;
}

LieAlgebra change_basis(const LieAlgebra& L, const QMat& p) {
  const size_t n = L.dim();
  if (p.rows() != n || p.cols() != n) throw Error("BadShape", "change_basis needs square basis matrix");
  Subspace sp = Subspace::span(p);
  if (sp.dim() != n) throw Error("BadShape", "change_basis rows not a basis");
  LieAlgebra M(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      QVec w = L.bracket(p.row(i), p.row(j));
      auto coords = solve_combination(p, w);
      if (!coords) throw Error("Internal", "change_basis: bracket escaped span");
      M.set_bracket(i, j, *coords);
    }
  return M;
}

SplitResult split_abelian_factor(const LieAlgebra& L) {
  const size_t n = L.dim();
  Subspace Z = center(L);
  Subspace D = derived(L);
  Subspace zd = intersect(Z, D);
  // Central vectors missing the derived subalgebra split off as an
  // abelian direct factor.
  Subspace A = complement_avoiding(Z, zd);
  const size_t ell = A.dim();

  // Complement containing the derived subalgebra: greedily extend D's
  // basis with coordinate vectors, keeping the span clear of A.
  std::vector<QVec> rows;
  for (size_t i = 0; i < D.dim(); ++i) rows.push_back(D.basis_row(i));
  Subspace cur = D;
  for (size_t i = 0; i < n && cur.dim() < n - ell; ++i) {
    QVec e = unit_vec(n, i);
    std::vector<QVec> trial = rows;
    trial.push_back(e);
    Subspace span_trial = Subspace::span(trial, n);
    if (span_trial.dim() == cur.dim() + 1 && intersect(span_trial, A).dim() == 0) {
      rows = std::move(trial);
      cur = span_trial;
    }
  }
  if (cur.dim() != n - ell) throw Error("Internal", "split_abelian_factor: complement extension failed");

  QMat mbasis = cur.basis();
  LieAlgebra M(n - ell);
  for (size_t i = 0; i < n - ell; ++i)
    for (size_t j = i + 1; j < n - ell; ++j) {
      QVec w = L.bracket(mbasis.row(i), mbasis.row(j));
      auto coords = solve_combination(mbasis, w);
      if (!coords) throw Error("Internal", "split_abelian_factor: bracket escaped complement");
      M.set_bracket(i, j, *coords);
    }
  return SplitResult{ell, std::move(M), mbasis, A.basis()};
}

bool is_derivation(const LieAlgebra& L, const QMat& D) {
  const size_t n = L.dim();
  if (D.rows() != n || D.cols() != n) throw Error("BadShape", "derivation matrix shape mismatch");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      QVec lhs = D.apply(L.bracket_basis(i, j));
      QVec rhs = L.bracket(D.col(i), unit_vec(n, j));
      axpy(rhs, Rat(1), L.bracket(unit_vec(n, i), D.col(j)));
      for (size_t k = 0; k < n; ++k)
        if (lhs[k] != rhs[k]) return false;
    }
  return true;
}

QMat Representation::apply(const QVec& v) const {
  if (mats.empty()) return QMat(0, 0);
  QMat out(mats[0].rows(), mats[0].cols());
  for (size_t i = 0; i < mats.size(); ++i)
    if (v[i] != 0) out = out + mats[i] * v[i];
  return out;
}

VerifyResult verify_representation(const LieAlgebra& L, const Representation& rho) {
  const size_t n = L.dim();
  VerifyResult res;
  res.is_module = true;
  for (size_t i = 0; i < n && res.is_module; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      QMat lhs = rho.apply(L.bracket_basis(i, j));
      QMat rhs = commutator(rho.mats[i], rho.mats[j]);
      if (lhs != rhs) {
        res.is_module = false;
        res.first_violation = {i, j};
        break;
      }
    }
  const size_t d = rho.degree();
  QMat stacked(d * d, n);
  for (size_t i = 0; i < n; ++i) {
    QVec flat = rho.mats[i].vec();
    for (size_t r = 0; r < d * d; ++r) stacked.at(r, i) = flat[r];
  }
  res.kernel = kernel(stacked);
  res.faithful = res.kernel.dim() == 0;
  return res;
}

void validate_derivation_set(const DerivationSet& ds) {
  const size_t s = ds.mats.size();
  for (size_t i = 0; i < s; ++i)
    if (!is_derivation(ds.algebra, ds.mats[i]))
      throw Error("NotDerivation", "matrix " + std::to_string(i + 1) + " fails the Leibniz rule");
  // Commutator closure of the span.
  const size_t n = ds.algebra.dim();
  std::vector<QVec> flat;
  for (const QMat& m : ds.mats) flat.push_back(m.vec());
  QMat rows = QMat::from_rows(flat, n * n);
  Subspace span = Subspace::span(rows);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = i + 1; j < s; ++j) {
      QVec c = commutator(ds.mats[i], ds.mats[j]).vec();
      if (!span.contains(c))
        throw Error("NotClosed", "commutator [D" + std::to_string(i + 1) + ",D" +
                                     std::to_string(j + 1) + "] leaves the span");
    }
}

Representation extend_by_derivation(const LieAlgebra& L, const QMat& D) {
  const size_t n = L.dim();
  if (!is_derivation(L, D)) throw Error("NotDerivation", "extend_by_derivation needs a derivation");
  Subspace Z = center(L);
  // Derivations preserve the center; require an isomorphism there.
  std::vector<QVec> dz;
  for (size_t i = 0; i < Z.dim(); ++i) dz.push_back(D.apply(Z.basis_row(i)));
  Subspace image = Subspace::span(dz, n);
  if (image.dim() != Z.dim() || !Z.contains(image))
    throw Error("CenterDegenerate", "derivation is not an isomorphism on the center");

  // E = <D> x| L with basis (e0 = D, e1..en = basis of L); return ad_E
  // restricted to the copy of L.
  LieAlgebra E(n + 1);
  for (size_t j = 0; j < n; ++j) {
    QVec w(n + 1, Rat(0));
    QVec dj = D.col(j);
    for (size_t k = 0; k < n; ++k) w[k + 1] = dj[k];
    E.set_bracket(0, j + 1, std::move(w));
  }
  for (const auto& [ij, v] : L.table()) {
    QVec w(n + 1, Rat(0));
    for (size_t k = 0; k < n; ++k) w[k + 1] = v[k];
    E.set_bracket(ij.first + 1, ij.second + 1, std::move(w));
  }
  Representation rho;
  rho.algebra = L;
  for (size_t i = 0; i < n; ++i) rho.mats.push_back(E.ad_basis(i + 1));
  return rho;
}

SemidirectData semidirect_decompose(const LieAlgebra& L, const std::vector<size_t>& inner_indices) {
  const size_t n = L.dim();
  std::vector<bool> is_inner(n, false);
  for (size_t i : inner_indices) {
    if (i >= n) throw Error("BadIndex", "inner index out of range");
    if (is_inner[i]) throw Error("BadIndex", "duplicate inner index");
    is_inner[i] = true;
  }
  std::vector<size_t> inner = inner_indices;
  std::sort(inner.begin(), inner.end());
  std::vector<size_t> outer;
  for (size_t i = 0; i < n; ++i)
    if (!is_inner[i]) outer.push_back(i);

  auto inner_coords = [&](const QVec& v, const char* err) {
    QVec w(inner.size(), Rat(0));
    for (size_t k = 0; k < n; ++k) {
      if (v[k] == 0) continue;
      if (!is_inner[k]) throw Error(err, "bracket leaves the selected span");
      for (size_t p = 0; p < inner.size(); ++p)
        if (inner[p] == k) w[p] = v[k];
    }
    return w;
  };

  // Ideal check: [L, inner] inside inner span.
  LieAlgebra N(inner.size());
  for (size_t p = 0; p < inner.size(); ++p)
    for (size_t q = p + 1; q < inner.size(); ++q)
      N.set_bracket(p, q, inner_coords(L.bracket_basis(inner[p], inner[q]), "NotAnIdeal"));
  for (size_t o : outer)
    for (size_t i : inner) inner_coords(L.bracket_basis(o, i), "NotAnIdeal");

  // Complement must close as a subalgebra.
  LieAlgebra B(outer.size());
  for (size_t p = 0; p < outer.size(); ++p)
    for (size_t q = p + 1; q < outer.size(); ++q) {
      QVec v = L.bracket_basis(outer[p], outer[q]);
      QVec w(outer.size(), Rat(0));
      for (size_t k = 0; k < n; ++k) {
        if (v[k] == 0) continue;
        if (is_inner[k]) throw Error("NotASubalgebra", "complement bracket has an inner component");
        for (size_t r = 0; r < outer.size(); ++r)
          if (outer[r] == k) w[r] = v[k];
      }
      B.set_bracket(p, q, std::move(w));
    }

  // Action of the complement on the ideal.
  DerivationSet action;
  action.algebra = N;
  for (size_t o : outer) {
    QMat d(inner.size(), inner.size());
    for (size_t q = 0; q < inner.size(); ++q) {
      QVec w = inner_coords(L.bracket_basis(o, inner[q]), "NotAnIdeal");
      for (size_t p = 0; p < inner.size(); ++p) d.at(p, q) = w[p];
    }
    action.mats.push_back(std::move(d));
  }

  // Injectivity of x -> (ad x restricted to inner, inner part): fails
  // exactly when a nonzero combination of complement vectors acts as zero.
  if (!outer.empty()) {
    const size_t m = inner.size();
    QMat stacked(m * m, outer.size());
    for (size_t c = 0; c < outer.size(); ++c) {
      QVec flat = action.mats[c].vec();
      for (size_t r = 0; r < m * m; ++r) stacked.at(r, c) = flat[r];
    }
    if (kernel(stacked).dim() != 0)
      throw Error("NotInjective",
                  "a complement vector centralizes the ideal; split abelian factors first");
  }

  return SemidirectData{std::move(N), std::move(inner), std::move(B), std::move(outer), std::move(action)};
}

AffineEmbedResult affine_embed(const DerivationSet& b_on_a) {
  const LieAlgebra& A = b_on_a.algebra;
  const size_t r = A.dim();
  if (!A.table().empty()) throw Error("NotAbelian", "affine_embed needs an abelian algebra");
  validate_derivation_set(b_on_a);
  const size_t s = b_on_a.mats.size();

  // Faithful action: the derivations must be linearly independent.
  if (s > 0) {
    std::vector<QVec> flat;
    for (const QMat& m : b_on_a.mats) flat.push_back(m.vec());
    if (Subspace::span(flat, r * r).dim() != s)
      throw Error("NotFaithfulAction", "derivations are linearly dependent");
  }

  // Algebra b x| a on basis (b_1..b_s, a_1..a_r).
  LieAlgebra G(s + r);
  std::vector<QVec> flat;
  for (const QMat& m : b_on_a.mats) flat.push_back(m.vec());
  QMat flat_rows = QMat::from_rows(flat, r * r);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = i + 1; j < s; ++j) {
      QVec c = commutator(b_on_a.mats[i], b_on_a.mats[j]).vec();
      auto coords = solve_combination(flat_rows, c);
      if (!coords) throw Error("NotClosed", "commutator leaves the derivation span");
      QVec w(s + r, Rat(0));
      for (size_t k = 0; k < s; ++k) w[k] = (*coords)[k];
      G.set_bracket(i, j, std::move(w));
    }
  for (size_t i = 0; i < s; ++i)
    for (size_t q = 0; q < r; ++q) {
      QVec dv = b_on_a.mats[i].col(q);
      QVec w(s + r, Rat(0));
      for (size_t k = 0; k < r; ++k) w[s + k] = dv[k];
      if (!is_zero(w)) G.set_bracket(i, s + q, std::move(w));
    }

  // Affine matrices on Q^(r+1): derivations in the top-left block,
  // abelian vectors in the last column.
  Representation rho;
  rho.algebra = G;
  for (size_t i = 0; i < s; ++i) {
    QMat m(r + 1, r + 1);
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < r; ++b) m.at(a, b) = b_on_a.mats[i].at(a, b);
    rho.mats.push_back(std::move(m));
  }
  for (size_t q = 0; q < r; ++q) {
    QMat m(r + 1, r + 1);
    m.at(q, r) = 1;
    rho.mats.push_back(std::move(m));
  }
  return AffineEmbedResult{std::move(G), std::move(rho)};
}

} // namespace nilrep
