#include "nilrep/reducer.hpp"

#include "nilrep/errors.hpp"

namespace nilrep {
namespace reducer {

namespace {

/// {v : Av in F}, via the annihilator of F.
Subspace preimage(const Subspace& f, const QMat& a) {
  Subspace ann = kernel(f.basis());
  if (ann.dim() == 0) return Subspace::full(a.cols());
  QMat n(ann.dim(), a.rows());
  for (size_t r = 0; r < ann.dim(); ++r) n.set_row(r, ann.basis_row(r));
  return kernel(n * a);
}

bool matrix_nilpotent(const QMat& a) {
  const size_t d = a.rows();
  if (d == 0) return true;
  Subspace f = kernel(a);
  while (f.dim() < d) {
    Subspace next = preimage(f, a);
    if (next.dim() == f.dim()) return false;
    f = next;
  }
  return true;
}

/// Reduces v modulo the RREF rows of u, in place.
void reduce_mod(const Subspace& u, QVec& v) {
  for (size_t r = 0; r < u.dim(); ++r) {
    size_t p = u.pivots()[r];
    if (v[p] == 0) continue;
    Rat c = v[p];
    QVec row = u.basis_row(r);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= c * row[k];
  }
}

/// True when every nonzero central combination still acts nonzero on V/U.
bool center_faithful_mod(const std::vector<QMat>& center_mats, const Subspace& u) {
  const size_t cz = center_mats.size();
  if (cz == 0) return true;
  const size_t d = center_mats[0].rows();
  QMat stacked(d * d, cz);
  for (size_t i = 0; i < cz; ++i)
    for (size_t col = 0; col < d; ++col) {
      QVec v = center_mats[i].col(col);
      reduce_mod(u, v);
      for (size_t r = 0; r < d; ++r) stacked.at(col * d + r, i) = v[r];
    }
  return kernel(stacked).dim() == 0;
}

struct QuotientMaps {
  QMat q; // (d-k) x d projection onto non-pivot coordinates after reduction
  QMat s; // d x (d-k) section embedding those coordinates back
};

QuotientMaps quotient_maps(const Subspace& u, size_t d) {
  std::vector<size_t> free_cols;
  {
    std::vector<bool> is_pivot(d, false);
    for (size_t p : u.pivots()) is_pivot[p] = true;
    for (size_t c = 0; c < d; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  QuotientMaps m{QMat(free_cols.size(), d), QMat(d, free_cols.size())};
  for (size_t c = 0; c < d; ++c) {
    QVec v = unit_vec(d, c);
    reduce_mod(u, v);
    for (size_t r = 0; r < free_cols.size(); ++r) m.q.at(r, c) = v[free_cols[r]];
  }
  for (size_t r = 0; r < free_cols.size(); ++r) m.s.at(free_cols[r], r) = 1;
  return m;
}

Representation quotient_rep(const Representation& rep, const Subspace& u) {
  QuotientMaps maps = quotient_maps(u, rep.degree());
  Representation out;
  out.algebra = rep.algebra;
  for (const QMat& m : rep.mats) out.mats.push_back(maps.q * m * maps.s);
  return out;
}

std::vector<QMat> center_action(const Representation& rep) {
  Subspace z = center(rep.algebra);
  std::vector<QMat> mats;
  for (size_t r = 0; r < z.dim(); ++r) mats.push_back(rep.apply(z.basis_row(r)));
  return mats;
}

/// Greedy complement selection; empty result means nothing is removable.
Subspace greedy_complement(const Representation& rep, const Subspace& inv) {
  const size_t d = rep.degree();
  std::vector<QMat> zmats = center_action(rep);
  std::vector<QVec> chosen;
  for (size_t r = 0; r < inv.dim(); ++r) {
    std::vector<QVec> cand = chosen;
    cand.push_back(inv.basis_row(r));
    Subspace u = Subspace::span(cand, d);
    if (center_faithful_mod(zmats, u)) chosen = std::move(cand);
  }
  return Subspace::span(chosen, d);
}

} // namespace

bool is_nilpotent_rep(const Representation& rep) {
  for (const QMat& m : rep.mats)
    if (!matrix_nilpotent(m)) return false;
  return true;
}

Subspace invariant_space(const Representation& rep) {
  if (!is_nilpotent_rep(rep))
    throw Error("NotNilpotentModule", "an action matrix is not nilpotent");
  const size_t d = rep.degree();
  if (rep.mats.empty()) return Subspace::full(d);
  QMat stacked(rep.mats.size() * d, d);
  for (size_t i = 0; i < rep.mats.size(); ++i)
    for (size_t r = 0; r < d; ++r) stacked.set_row(i * d + r, rep.mats[i].row(r));
  return kernel(stacked);
}

ReduceResult reduce_once(const Representation& rep) {
  Subspace inv = invariant_space(rep); // also enforces nilpotency
  Subspace u = greedy_complement(rep, inv);
  if (u.dim() == 0)
    throw Error("NoAdmissibleComplement", "no invariant vector can be removed faithfully");
  Representation q = quotient_rep(rep, u);
  VerifyResult v = verify_representation(q.algebra, q);
  if (!v.is_module || !v.faithful)
    throw Error("Internal", "reduction produced a non-faithful module");
  return ReduceResult{std::move(q), inv.dim(), u.dim()};
}

ReductionChain reduce_fully(const Representation& rep) {
  ReductionChain chain;
  chain.initial_dim = rep.degree();
  Representation cur = rep;
  while (true) {
    Subspace inv = invariant_space(cur);
    Subspace u = greedy_complement(cur, inv);
    if (u.dim() == 0) break;
    Representation q = quotient_rep(cur, u);
    VerifyResult v = verify_representation(q.algebra, q);
    if (!v.is_module || !v.faithful)
      throw Error("Internal", "reduction produced a non-faithful module");
    chain.steps.push_back(ChainStep{cur, inv.dim(), u.dim()});
    cur = std::move(q);
  }
  chain.final_rep = std::move(cur);
  return chain;
}

namespace {

size_t search_minimal(const Representation& rep) {
  const size_t d = rep.degree();
  Subspace inv = invariant_space(rep);
  std::vector<QMat> zmats = center_action(rep);
  size_t best = d;
  const size_t w = inv.dim();
  for (size_t mask = 1; mask < (size_t(1) << w); ++mask) {
    std::vector<QVec> rows;
    for (size_t r = 0; r < w; ++r)
      if (mask & (size_t(1) << r)) rows.push_back(inv.basis_row(r));
    Subspace u = Subspace::span(rows, d);
    if (!center_faithful_mod(zmats, u)) continue;
    best = std::min(best, search_minimal(quotient_rep(rep, u)));
  }
  return best;
}

} // namespace

size_t minimal_final_dim_exhaustive(const Representation& rep) {
  if (rep.degree() > 12)
    throw Error("BadArguments", "exhaustive search is limited to dimension 12");
  if (!is_nilpotent_rep(rep))
    throw Error("NotNilpotentModule", "an action matrix is not nilpotent");
  return search_minimal(rep);
}

} // namespace reducer
} // namespace nilrep
