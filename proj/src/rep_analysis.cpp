#include "nilrep/rep_analysis.hpp"

#include "nilrep/errors.hpp"

#include <algorithm>
#include <set>

namespace nilrep {
namespace rep_analysis {

std::vector<Rat> char_poly(const QMat& a) {
  const size_t k = a.rows();
  if (k != a.cols()) throw Error("BadShape", "characteristic polynomial needs a square matrix");
  // Faddeev-LeVerrier: p(x) = x^k + a_1 x^{k-1} + ... + a_k.
  std::vector<Rat> coeff(k + 1, Rat(0));
  coeff[k] = 1;
  QMat m = QMat::identity(k);
  Rat aj(0);
  for (size_t j = 1; j <= k; ++j) {
    m = a * m;
    Rat tr(0);
    for (size_t i = 0; i < k; ++i) tr += m.at(i, i);
    aj = -tr / Rat(static_cast<long>(j));
    coeff[k - j] = aj;
    for (size_t i = 0; i < k; ++i) m.at(i, i) += aj;
  }
  return coeff;
}

namespace {

std::vector<Int> divisors(Int x) {
  if (x < 0) x = -x;
  std::vector<Int> out;
  Int i = 1;
  while (i * i <= x) {
    if (x % i == 0) {
      out.push_back(i);
      out.push_back(x / i);
    }
    i += 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat eval_poly(const std::vector<Rat>& p, const Rat& x) {
  Rat v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<Rat> deflate(const std::vector<Rat>& p, const Rat& root) {
  // Synthetic division by (x - root); remainder known to vanish.
  std::vector<Rat> q(p.size() - 1, Rat(0));
  Rat carry(0);
  for (size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

} // namespace

std::pair<std::vector<std::pair<Rat, size_t>>, size_t> rational_roots(std::vector<Rat> poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.empty()) throw Error("BadArguments", "zero polynomial");
  std::map<Rat, size_t> mult;
  size_t total = 0;

  size_t zeros = 0;
  while (zeros < poly.size() - 1 && poly[zeros] == 0) ++zeros;
  if (zeros > 0) {
    mult[Rat(0)] = zeros;
    total += zeros;
    poly.erase(poly.begin(), poly.begin() + zeros);
  }
  if (poly.size() > 1) {
    Int denom_lcm = 1;
    for (const Rat& c : poly) {
      Int d = c.get_den();
      denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
    }
    Int lead = poly.back().get_num() * (denom_lcm / poly.back().get_den());
    Int constant = poly.front().get_num() * (denom_lcm / poly.front().get_den());
    std::set<Rat> candidates;
    for (const Int& p : divisors(constant))
      for (const Int& q : divisors(lead)) {
        Rat r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const Rat& r : candidates) {
      while (poly.size() > 1 && eval_poly(poly, r) == 0) {
        poly = deflate(poly, r);
        ++mult[r];
        ++total;
      }
    }
  }
  std::vector<std::pair<Rat, size_t>> out(mult.begin(), mult.end());
  return {out, total};
}

namespace {

QMat mat_pow(QMat a, size_t e) {
  QMat r = QMat::identity(a.rows());
  while (e > 0) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

/// Restriction of an ambient operator to the span of the given rows.
QMat restrict_to(const QMat& op, const QMat& rows) {
  const size_t k = rows.rows();
  QMat r(k, k);
  for (size_t c = 0; c < k; ++c) {
    QVec img = op.apply(rows.row(c));
    auto coords = solve_combination(rows, img);
    if (!coords) throw Error("Internal", "block is not invariant under the action");
    for (size_t rr = 0; rr < k; ++rr) r.at(rr, c) = (*coords)[rr];
  }
  return r;
}

QMat rows_times(const QMat& coeffs, const QMat& rows) {
  // Each row of coeffs gives coordinates in the span of `rows`.
  QMat out(coeffs.rows(), rows.cols());
  for (size_t r = 0; r < coeffs.rows(); ++r) {
    QVec acc = zero_vec(rows.cols());
    for (size_t c = 0; c < coeffs.cols(); ++c)
      if (coeffs.at(r, c) != 0) axpy(acc, coeffs.at(r, c), rows.row(c));
    out.set_row(r, acc);
  }
  return out;
}

Subspace joint_engel_step(const std::vector<QMat>& ops, const Subspace& f) {
  const size_t k = f.ambient();
  if (ops.empty()) return Subspace::full(k);
  Subspace ann = kernel(f.basis());
  if (ann.dim() == 0) return Subspace::full(k);
  QMat annm(ann.dim(), k);
  for (size_t r = 0; r < ann.dim(); ++r) annm.set_row(r, ann.basis_row(r));
  QMat stacked(ops.size() * ann.dim(), k);
  for (size_t i = 0; i < ops.size(); ++i) {
    QMat prod = annm * ops[i];
    for (size_t r = 0; r < ann.dim(); ++r) stacked.set_row(i * ann.dim() + r, prod.row(r));
  }
  return kernel(stacked);
}

} // namespace

WeightSplit weight_decompose(const Representation& rep) {
  const LieAlgebra& L = rep.algebra;
  const size_t n = L.dim();
  const size_t d = rep.degree();
  lower_central_series(L); // throws NotNilpotent when L is not

  std::vector<QMat> blocks{QMat::identity(d)};
  if (d == 0) blocks.clear();

  for (size_t i = 0; i < n; ++i) {
    std::vector<QMat> next;
    for (const QMat& b : blocks) {
      const size_t k = b.rows();
      QMat r = restrict_to(rep.mats[i], b);
      auto [roots, total] = rational_roots(char_poly(r));
      if (total != k)
        throw Error("IrrationalWeights", "an action matrix has irrational eigenvalues");
      for (const auto& [lambda, m] : roots) {
        (void)m;
        QMat shifted = r;
        for (size_t t = 0; t < k; ++t) shifted.at(t, t) -= lambda;
        Subspace g = kernel(mat_pow(shifted, k));
        QMat coeffs(g.dim(), k);
        for (size_t rr = 0; rr < g.dim(); ++rr) coeffs.set_row(rr, g.basis_row(rr));
        next.push_back(rows_times(coeffs, b));
      }
    }
    blocks = std::move(next);
  }

  // Per-block weights, then an Engel-flag basis making every nu strictly
  // upper triangular inside each block.
  WeightSplit split;
  std::vector<QMat> final_rows;
  for (const QMat& b : blocks) {
    const size_t k = b.rows();
    QVec w(n, Rat(0));
    std::vector<QMat> nus;
    for (size_t i = 0; i < n; ++i) {
      QMat r = restrict_to(rep.mats[i], b);
      Rat tr(0);
      for (size_t t = 0; t < k; ++t) tr += r.at(t, t);
      w[i] = tr / Rat(static_cast<long>(k));
      for (size_t t = 0; t < k; ++t) r.at(t, t) -= w[i];
      nus.push_back(std::move(r));
    }
    Subspace flag = Subspace::zero(k);
    std::vector<QVec> adapted;
    while (flag.dim() < k) {
      Subspace next = joint_engel_step(nus, flag);
      if (next.dim() == flag.dim())
        throw Error("Internal", "block action is not jointly nilpotent");
      Subspace ext = complement_avoiding(next, flag);
      for (size_t r = 0; r < ext.dim(); ++r) adapted.push_back(ext.basis_row(r));
      flag = next;
    }
    QMat intra = QMat::from_rows(adapted, k);
    final_rows.push_back(rows_times(intra, b));
    split.weights.push_back(std::move(w));
    split.block_dims.push_back(k);
  }

  std::vector<QVec> prows;
  for (const QMat& b : final_rows)
    for (size_t r = 0; r < b.rows(); ++r) prows.push_back(b.row(r));
  QMat p = QMat::from_rows(prows, d);
  split.change_of_basis = p;

  for (size_t i = 0; i < n; ++i) {
    QMat m(d, d);
    for (size_t c = 0; c < d; ++c) {
      QVec img = rep.mats[i].apply(p.row(c));
      auto coords = solve_combination(p, img);
      if (!coords) throw Error("Internal", "change of basis is singular");
      for (size_t r = 0; r < d; ++r) m.at(r, c) = (*coords)[r];
    }
    QMat delta(d, d);
    size_t off = 0;
    for (size_t bidx = 0; bidx < split.block_dims.size(); ++bidx) {
      for (size_t t = 0; t < split.block_dims[bidx]; ++t)
        delta.at(off + t, off + t) = split.weights[bidx][i];
      off += split.block_dims[bidx];
    }
    QMat nu = m - delta;
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c <= r; ++c)
        if (nu.at(r, c) != 0) throw Error("Internal", "nu part is not strictly upper triangular");
    split.delta.push_back(std::move(delta));
    split.nu.push_back(std::move(nu));
  }

  // Weights vanish on brackets; delta and nu commute by block structure.
  // Both are consequences, verified here.
  for (size_t a = 0; a < n; ++a)
    for (size_t b2 = a + 1; b2 < n; ++b2) {
      QVec br = L.bracket_basis(a, b2);
      QMat acc(d, d);
      for (size_t k2 = 0; k2 < n; ++k2)
        if (br[k2] != 0) acc = acc + split.delta[k2] * br[k2];
      if (!acc.is_zero()) throw Error("Internal", "weights do not vanish on the derived algebra");
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b2 = 0; b2 < n; ++b2)
      if (!(split.delta[a] * split.nu[b2] == split.nu[b2] * split.delta[a]))
        throw Error("Internal", "delta and nu do not commute");
  return split;
}

namespace {

bool stacked_kernel_zero(const std::vector<QMat>& mats) {
  if (mats.empty()) return true;
  const size_t d = mats[0].rows();
  const size_t n = mats.size();
  QMat k(d * d, n);
  for (size_t i = 0; i < n; ++i) {
    QVec v = mats[i].vec();
    for (size_t r = 0; r < v.size(); ++r) k.at(r, i) = v[r];
  }
  return kernel(k).dim() == 0;
}

} // namespace

TransferResult faithful_transfer(const Representation& rep) {
  const LieAlgebra& L = rep.algebra;
  TransferResult res;
  res.hypothesis_ok = L.dim() == 0 || derived(L).contains(center(L));
  WeightSplit split = weight_decompose(rep);
  res.rho_faithful = stacked_kernel_zero(rep.mats);
  res.nu_faithful = stacked_kernel_zero(split.nu);
  res.status = res.hypothesis_ok ? "ok" : "HypothesisFails";
  if (res.hypothesis_ok && res.rho_faithful != res.nu_faithful)
    throw Error("Internal", "faithfulness transfer equivalence failed");
  return res;
}

} // namespace rep_analysis
} // namespace nilrep
