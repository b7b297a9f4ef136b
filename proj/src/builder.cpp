#include "nilrep/builder.hpp"

#include "nilrep/bounds.hpp"
#include "nilrep/errors.hpp"

#include <algorithm>
#include <set>

namespace nilrep {
namespace builder {

using pbw::Elt;
using pbw::Monomial;
using pbw::PBWContext;

CompatibleIdeal check_compatible(const PBWContext& ctx, size_t m_pos) {
  const size_t n = ctx.n();
  if (m_pos > n) throw Error("BadIndex", "suffix start out of range");
  auto in_j = [&](size_t p) { return p >= m_pos; };

  for (size_t p = 0; p < n; ++p)
    for (size_t q = p + 1; q < n; ++q) {
      bool pj = in_j(p), qj = in_j(q);
      if (!pj && !qj) continue;
      const auto& br = ctx.bracket_pos(p, q);
      if (pj && qj && !br.empty())
        throw Error("NotAbelian", "positions " + std::to_string(p + 1) + "," +
                                      std::to_string(q + 1) + " do not commute inside J");
      for (const auto& [k, c] : br) {
        (void)c;
        if (!in_j(k))
          throw Error("NotIdeal", "bracket of " + std::to_string(p + 1) + "," +
                                      std::to_string(q + 1) + " leaves J");
      }
    }
  for (const QMat& d : ctx.derivs)
    for (size_t q = m_pos; q < n; ++q)
      for (size_t p = 0; p < n; ++p)
        if (d.at(p, q) != 0 && !in_j(p))
          throw Error("NotDInvariant", "derivation image of position " + std::to_string(q + 1) +
                                           " leaves J");

  // Squeeze level: J inside n^[t] via sortedness; n^[t+1] inside J because
  // every deeper vector sorts after the order-t block.
  uint32_t t = (m_pos == n) ? ctx.C : ctx.order[m_pos];
  for (size_t p = 0; p < m_pos; ++p)
    if (ctx.order[p] > t)
      throw Error("NotSqueezed", "vector of order " + std::to_string(ctx.order[p]) +
                                     " precedes the level-" + std::to_string(t) + " suffix");
  return CompatibleIdeal{m_pos, t};
}

bool is_zj_monomial(const PBWContext& ctx, size_t m_pos, const Monomial& m) {
  if (m.length < 2) return false;
  if (m.order >= ctx.C) return true;
  for (size_t p = m_pos; p < ctx.n(); ++p)
    if (m.exp[p] > 0) return true;
  return false;
}

namespace {

/// Number of monomials of order <= bound, for the overflow guard.
Int count_monomials(const PBWContext& ctx, uint32_t bound) {
  std::vector<Int> ways(bound + 1, Int(0));
  ways[0] = 1;
  for (size_t p = 0; p < ctx.n(); ++p) {
    uint32_t w = ctx.order[p];
    for (uint32_t j = w; j <= bound; ++j) ways[j] += ways[j - w];
  }
  Int total = 0;
  for (const Int& x : ways) total += x;
  return total;
}

std::vector<Monomial> quotient_basis(const PBWContext& ctx, size_t m_pos, size_t cap) {
  uint32_t bound = ctx.T;
  if (count_monomials(ctx, bound) > Int(static_cast<unsigned long>(cap)))
    throw Error("DimensionOverflow", "monomial basis exceeds the cap");
  return pbw::enumerate_monomials(
      ctx, bound, [&](const Monomial& m) { return !is_zj_monomial(ctx, m_pos, m); });
}

std::map<Monomial, size_t, pbw::MonomialLess> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, size_t, pbw::MonomialLess> lookup;
  for (size_t i = 0; i < basis.size(); ++i) lookup.emplace(basis[i], i);
  return lookup;
}

Elt act(const PBWContext& ctx, const Generator& g, const Monomial& m) {
  Elt e;
  e.emplace(m, Rat(1));
  Elt out;
  if (!g.deriv_pos.is_zero()) out = pbw::derive(ctx, g.deriv_pos, e);
  if (!is_zero(g.inner_pos)) pbw::add_scaled(out, pbw::left_mul(ctx, g.inner_pos, e), Rat(1));
  return out;
}

} // namespace

QuotientModule build_quotient(const PBWContext& ctx, const CompatibleIdeal& ideal,
                              const std::vector<Generator>& gens, size_t cap) {
  if (!ctx.order_raising)
    throw Error("DerivationsNotOrderRaising", "build_quotient needs order-raising derivations");
  QuotientModule qm;
  qm.ctx = ctx;
  qm.ideal = ideal;
  qm.provenance = "quotient";
  qm.basis = quotient_basis(ctx, ideal.m_pos, cap);
  for (const Monomial& m : qm.basis) qm.basis_names.push_back(ctx.monomial_name(m));
  auto lookup = index_of(qm.basis);

  const size_t d = qm.basis.size();
  for (const Generator& g : gens) {
    QMat mat(d, d);
    for (size_t b = 0; b < d; ++b) {
      Elt res = act(ctx, g, qm.basis[b]);
      for (const auto& [m, c] : res) {
        if (is_zj_monomial(ctx, ideal.m_pos, m)) continue;
        mat.at(lookup.at(m), b) = c;
      }
    }
    qm.mats.push_back(std::move(mat));
  }
  return qm;
}

QuotientModule build_quotient_subspace_oracle(const PBWContext& ctx, const CompatibleIdeal& ideal,
                                              const std::vector<Generator>& gens) {
  // Ambient: every monomial of order <= T.
  std::vector<Monomial> ambient = pbw::enumerate_monomials(ctx, ctx.T);
  auto alookup = index_of(ambient);
  const size_t N = ambient.size();
  auto to_coords = [&](const Elt& e) {
    QVec v(N, Rat(0));
    for (const auto& [m, c] : e) v[alookup.at(m)] = c;
    return v;
  };

  // <<J>>: two-sided products X^a * y * X^b for y in J.
  std::vector<QVec> ideal_rows;
  for (size_t p = ideal.m_pos; p < ctx.n(); ++p) {
    Elt y;
    y.emplace(ctx.single(p), Rat(1));
    for (const Monomial& ma : ambient) {
      if (ma.order + ctx.order[p] > ctx.T) continue;
      Elt a;
      a.emplace(ma, Rat(1));
      Elt ay = pbw::multiply(ctx, a, y);
      for (const Monomial& mb : ambient) {
        if (ma.order + ctx.order[p] + mb.order > ctx.T) continue;
        Elt b;
        b.emplace(mb, Rat(1));
        Elt prod = pbw::multiply(ctx, ay, b);
        if (!prod.empty()) ideal_rows.push_back(to_coords(prod));
      }
    }
  }
  Subspace ideal_span = Subspace::span(ideal_rows, N);

  // L_2: monomials of length >= 2; V_C tail: length >= 2 and order >= C.
  std::vector<QVec> l2_rows, tail_rows;
  for (size_t i = 0; i < N; ++i) {
    if (ambient[i].length >= 2) l2_rows.push_back(unit_vec(N, i));
    if (ambient[i].length >= 2 && ambient[i].order >= ctx.C) tail_rows.push_back(unit_vec(N, i));
  }
  Subspace w_j = intersect(ideal_span, Subspace::span(l2_rows, N));
  Subspace z_j = sum(w_j, Subspace::span(tail_rows, N));

  // The surviving monomials must complement Z_J exactly.
  QuotientModule qm;
  qm.ctx = ctx;
  qm.ideal = ideal;
  qm.provenance = "quotient-subspace-oracle";
  std::vector<size_t> keep;
  for (size_t i = 0; i < N; ++i)
    if (!is_zj_monomial(ctx, ideal.m_pos, ambient[i])) keep.push_back(i);
  if (keep.size() + z_j.dim() != N)
    throw Error("Internal", "oracle: monomial complement has wrong dimension");
  std::vector<QVec> stack_rows;
  for (size_t i : keep) stack_rows.push_back(unit_vec(N, i));
  if (intersect(Subspace::span(stack_rows, N), z_j).dim() != 0)
    throw Error("Internal", "oracle: monomial complement meets Z_J");
  for (size_t r = 0; r < z_j.dim(); ++r) stack_rows.push_back(z_j.basis_row(r));
  QMat stack = QMat::from_rows(stack_rows, N);

  for (size_t i : keep) {
    qm.basis.push_back(ambient[i]);
    qm.basis_names.push_back(ctx.monomial_name(ambient[i]));
  }
  const size_t d = keep.size();
  for (const Generator& g : gens) {
    QMat mat(d, d);
    for (size_t b = 0; b < d; ++b) {
      QVec v = to_coords(act(ctx, g, qm.basis[b]));
      auto coords = solve_combination(stack, v);
      if (!coords) throw Error("Internal", "oracle: action escapes the ambient space");
      for (size_t r = 0; r < d; ++r) mat.at(r, b) = (*coords)[r];
    }
    qm.mats.push_back(std::move(mat));
  }
  return qm;
}

QuotientModule build_order_truncation(const PBWContext& ctx, const std::vector<Generator>& gens,
                                      size_t cap) {
  if (!ctx.order_preserving)
    throw Error("DerivationsNotOrderPreserving",
                "build_order_truncation needs order-preserving derivations");
  uint32_t bound = std::min(ctx.T, ctx.C);
  if (count_monomials(ctx, bound) > Int(static_cast<unsigned long>(cap)))
    throw Error("DimensionOverflow", "monomial basis exceeds the cap");

  QuotientModule qm;
  qm.ctx = ctx;
  qm.ideal = CompatibleIdeal{ctx.n(), ctx.C}; // no J involved
  qm.provenance = "order-truncation";
  qm.basis = pbw::enumerate_monomials(ctx, bound);
  for (const Monomial& m : qm.basis) qm.basis_names.push_back(ctx.monomial_name(m));
  auto lookup = index_of(qm.basis);

  const size_t d = qm.basis.size();
  // dim <= (3/sqrt(n)) 2^n, checked exactly by squaring.
  {
    Int lhs = Int(static_cast<unsigned long>(d));
    lhs = lhs * lhs * static_cast<unsigned long>(ctx.n());
    Int rhs = 9;
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 2 * ctx.n());
    if (ctx.n() > 0 && lhs > rhs)
      throw Error("Internal", "order-truncation dimension exceeds the stated bound");
  }
  for (const Generator& g : gens) {
    QMat mat(d, d);
    for (size_t b = 0; b < d; ++b) {
      Elt res = act(ctx, g, qm.basis[b]);
      for (const auto& [m, c] : res) {
        if (m.order > bound) continue;
        mat.at(lookup.at(m), b) = c;
      }
    }
    qm.mats.push_back(std::move(mat));
  }
  return qm;
}

CompatibleIdeal auto_select_ideal(const PBWContext& ctx) {
  const size_t n = ctx.n();

  // Candidate suffix starts: the center (when it is a suffix), every
  // filtration term, and greedy abelian enlargements of each term.
  std::set<size_t> starts;
  Subspace z = center(ctx.inner);
  if (z.dim() <= n) {
    size_t mz = n - z.dim();
    std::vector<QVec> rows;
    for (size_t p = mz; p < n; ++p) rows.push_back(unit_vec(n, ctx.perm[p]));
    if (Subspace::span(rows, n) == z) starts.insert(mz);
  }
  std::vector<size_t> term_starts;
  for (uint32_t t = 1; t <= ctx.C; ++t) {
    size_t m = 0;
    while (m < n && ctx.order[m] < t) ++m;
    term_starts.push_back(m);
  }
  for (size_t m : term_starts) {
    starts.insert(m);
    size_t m2 = m;
    while (m2 > 0) {
      try {
        check_compatible(ctx, m2 - 1);
      } catch (const Error&) {
        break;
      }
      --m2;
    }
    starts.insert(m2);
  }

  // Largest J wins; among equal dimensions the smallest level.
  std::optional<CompatibleIdeal> best;
  for (size_t m : starts) {
    try {
      CompatibleIdeal cand = check_compatible(ctx, m);
      if (!best || cand.m_pos < best->m_pos ||
          (cand.m_pos == best->m_pos && cand.level < best->level))
        best = cand;
    } catch (const Error&) {
      continue;
    }
  }
  if (!best) throw Error("NoCompatibleIdealFound", "no candidate suffix ideal is compatible");
  return *best;
}

namespace {

Subspace to_inner_subspace(const Subspace& amb, const std::vector<size_t>& inner, size_t n) {
  // Re-expresses an ambient subspace contained in the inner span.
  std::vector<bool> is_inner(n, false);
  for (size_t i : inner) is_inner[i] = true;
  std::vector<QVec> rows;
  for (size_t r = 0; r < amb.dim(); ++r) {
    QVec v = amb.basis_row(r);
    QVec w(inner.size(), Rat(0));
    for (size_t k = 0; k < n; ++k) {
      if (v[k] == 0) continue;
      if (!is_inner[k])
        throw Error("NotAdapted", "filtration term leaves the inner ideal");
      for (size_t p = 0; p < inner.size(); ++p)
        if (inner[p] == k) w[p] = v[k];
    }
    rows.push_back(std::move(w));
  }
  return Subspace::span(rows, inner.size());
}

} // namespace

BuildOutcome build_from_algebra(const BuildRequest& req) {
  const LieAlgebra& L = req.L;
  const size_t n = L.dim();
  validate(L);

  BuildOutcome out;
  out.sd = semidirect_decompose(L, req.inner);
  const size_t ni = out.sd.inner_indices.size();

  std::vector<Subspace> filtration;
  switch (req.filtration) {
    case FiltrationMode::induced: {
      filtration.push_back(Subspace::full(ni));
      std::vector<Subspace> series = lower_central_series(L);
      for (size_t i = 1; i < series.size(); ++i)
        filtration.push_back(to_inner_subspace(series[i], out.sd.inner_indices, n));
      break;
    }
    case FiltrationMode::own_lcs:
      filtration = lower_central_series(out.sd.inner);
      break;
    case FiltrationMode::custom: {
      if (req.custom_terms.empty()) throw Error("NotAdapted", "custom filtration has no terms");
      for (const auto& term : req.custom_terms) {
        std::vector<QVec> rows;
        for (size_t orig : term) {
          bool found = false;
          for (size_t p = 0; p < ni; ++p)
            if (out.sd.inner_indices[p] == orig) {
              rows.push_back(unit_vec(ni, p));
              found = true;
            }
          if (!found)
            throw Error("NotAdapted", "custom term index " + std::to_string(orig + 1) +
                                          " is not an inner basis vector");
        }
        filtration.push_back(Subspace::span(rows, ni));
      }
      break;
    }
  }
  const uint32_t C = static_cast<uint32_t>(filtration.size());
  const uint32_t T = req.truncate.value_or(C);

  std::vector<size_t> hint;
  if (req.ideal_m) {
    for (size_t p = 0; p < ni; ++p)
      if (out.sd.inner_indices[p] >= *req.ideal_m) hint.push_back(p);
    for (size_t orig = *req.ideal_m; orig < n; ++orig) {
      bool inner_member = false;
      for (size_t idx : out.sd.inner_indices) inner_member |= (idx == orig);
      if (!inner_member)
        throw Error("BadIndex", "ideal start " + std::to_string(*req.ideal_m + 1) +
                                    ": basis vector " + std::to_string(orig + 1) + " is not inner");
    }
  }
  std::vector<std::string> labels;
  for (size_t idx : out.sd.inner_indices) labels.push_back("X" + std::to_string(idx + 1));

  pbw::PBWContext ctx = pbw::make_context(out.sd.inner, filtration, out.sd.action.mats, T, hint, labels);

  CompatibleIdeal ideal{0, 0};
  if (req.ideal_m) {
    size_t m_pos = ni - hint.size();
    std::set<size_t> want(hint.begin(), hint.end());
    std::set<size_t> got;
    for (size_t p = m_pos; p < ni; ++p) got.insert(ctx.perm[p]);
    if (want != got)
      throw Error("NotSqueezed", "requested ideal cannot be aligned as a basis suffix");
    ideal = check_compatible(ctx, m_pos);
  } else {
    ideal = auto_select_ideal(ctx);
  }

  std::vector<Generator> gens;
  for (size_t k = 0; k < n; ++k) {
    Generator g;
    g.deriv_pos = QMat(ni, ni);
    g.inner_pos = zero_vec(ni);
    bool inner_member = false;
    for (size_t p = 0; p < ni; ++p)
      if (out.sd.inner_indices[p] == k) {
        QVec e = unit_vec(ni, p);
        g.inner_pos = ctx.to_positions(e);
        inner_member = true;
      }
    if (!inner_member) {
      for (size_t q = 0; q < out.sd.outer_indices.size(); ++q)
        if (out.sd.outer_indices[q] == k) g.deriv_pos = ctx.derivs[q];
    }
    gens.push_back(std::move(g));
  }

  out.qm = build_quotient(ctx, ideal, gens);
  out.rep = Representation{L, out.qm.mats};
  out.verify = verify_representation(L, out.rep);
  if (!out.verify.is_module || !out.verify.faithful)
    throw Error("FaithfulnessCheckFailed", "constructed quotient is not a faithful module");
  out.beta = ni - ideal.m_pos;

  bool standard_inner = (ni + 1 == n);
  if (standard_inner)
    for (size_t p = 0; p < ni; ++p) standard_inner &= (out.sd.inner_indices[p] == p + 1);
  if (is_filiform(L) && standard_inner && req.filtration == FiltrationMode::induced && T == C &&
      ideal.m_pos < ni)
    out.f_expected = bounds::f(static_cast<unsigned>(n), static_cast<unsigned>(out.beta));
  return out;
}

TwoStepResult two_step_module(const LieAlgebra& L) {
  const size_t n = L.dim();
  validate(L);
  if (n == 0) return TwoStepResult{Representation{L, {}}, 0, 0};
  size_t cls = nilpotency_class(L);
  if (cls > 2) throw Error("NotTwoStep", "nilpotency class exceeds 2");

  SplitResult split = split_abelian_factor(L);
  const size_t ell = split.abelian_dim;
  const size_t md = n - ell;

  Representation m_rep;
  if (md > 0) {
    const LieAlgebra& M = split.complement;
    Subspace der = derived(M);
    if (der.dim() == 0) throw Error("Internal", "two_step: reduced complement is abelian");

    // Hyperplane containing [M,M]: kernel of the first annihilating
    // functional; x1 is the functional's pivot coordinate vector.
    Subspace functionals = kernel(der.basis());
    QVec fvec = functionals.basis_row(0);
    size_t a = functionals.pivots()[0];
    Subspace hyper = kernel(QMat::from_rows({fvec}, md));
    Subspace ext = complement_avoiding(hyper, der);

    std::vector<QVec> prows;
    prows.push_back(unit_vec(md, a));
    for (size_t r = 0; r < ext.dim(); ++r) prows.push_back(ext.basis_row(r));
    for (size_t r = 0; r < der.dim(); ++r) prows.push_back(der.basis_row(r));
    QMat P = QMat::from_rows(prows, md);
    LieAlgebra M2 = change_basis(M, P);

    std::vector<size_t> inner;
    for (size_t i = 1; i < md; ++i) inner.push_back(i);
    SemidirectData sd = semidirect_decompose(M2, inner);

    std::vector<Subspace> filtration;
    filtration.push_back(Subspace::full(md - 1));
    std::vector<Subspace> series = lower_central_series(M2);
    if (series.size() != 2) throw Error("Internal", "two_step: reduced complement not class 2");
    std::vector<QVec> zrows;
    for (size_t r = 0; r < series[1].dim(); ++r) {
      QVec v = series[1].basis_row(r);
      if (v[0] != 0) throw Error("Internal", "two_step: derived escapes the hyperplane");
      zrows.push_back(QVec(v.begin() + 1, v.end()));
    }
    filtration.push_back(Subspace::span(zrows, md - 1));

    std::vector<size_t> hint;
    for (size_t i = md - 1 - der.dim(); i < md - 1; ++i) hint.push_back(i);
    std::vector<std::string> labels;
    for (size_t i = 1; i < md; ++i) labels.push_back("X" + std::to_string(i + 1));
    pbw::PBWContext ctx = pbw::make_context(sd.inner, filtration, sd.action.mats, 2, hint, labels);
    CompatibleIdeal ideal = check_compatible(ctx, md - 1 - der.dim());

    std::vector<Generator> gens;
    for (size_t i = 0; i < md; ++i) {
      auto coords = solve_combination(P, unit_vec(md, i));
      if (!coords) throw Error("Internal", "two_step: basis change not invertible");
      Generator g;
      g.deriv_pos = ctx.derivs[0] * (*coords)[0];
      QVec iv(md - 1, Rat(0));
      for (size_t k = 1; k < md; ++k) iv[k - 1] = (*coords)[k];
      g.inner_pos = ctx.to_positions(iv);
      gens.push_back(std::move(g));
    }
    QuotientModule qm = build_quotient(ctx, ideal, gens);
    if (qm.dim() != md) throw Error("Internal", "two_step: quotient dimension is not dim M");
    m_rep = Representation{M, qm.mats};
  }

  // Block sum with the diagonal module of the abelian factor.
  std::vector<QVec> stack_rows;
  for (size_t r = 0; r < ell; ++r) stack_rows.push_back(split.abelian_basis.row(r));
  for (size_t r = 0; r < md; ++r) stack_rows.push_back(split.complement_basis.row(r));
  QMat stack = QMat::from_rows(stack_rows, n);

  Representation rep;
  rep.algebra = L;
  for (size_t k = 0; k < n; ++k) {
    auto coords = solve_combination(stack, unit_vec(n, k));
    if (!coords) throw Error("Internal", "two_step: split basis not invertible");
    QMat m(n, n);
    for (size_t i = 0; i < ell; ++i) m.at(i, i) = (*coords)[i];
    if (md > 0) {
      QVec mc(coords->begin() + ell, coords->end());
      QMat mm = m_rep.apply(mc);
      for (size_t r = 0; r < md; ++r)
        for (size_t c = 0; c < md; ++c) m.at(ell + r, ell + c) = mm.at(r, c);
    }
    rep.mats.push_back(std::move(m));
  }
  VerifyResult v = verify_representation(L, rep);
  if (!v.is_module || !v.faithful)
    throw Error("FaithfulnessCheckFailed", "two-step module is not a faithful module");
  return TwoStepResult{std::move(rep), ell, md};
}

FiliformResult filiform_module(const LieAlgebra& f, size_t m_original) {
  const size_t n = f.dim();
  if (!is_filiform(f)) throw Error("NotFiliform", "algebra is not filiform");
  if (m_original < 1 || m_original >= n)
    throw Error("BadIndex", "ideal start must name one of x_2..x_n");
  for (size_t i = m_original; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!is_zero(f.bracket_basis(i, j)))
        throw Error("JNotAbelian", "[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) +
                                       "] is nonzero inside J");

  BuildRequest req;
  req.L = f;
  for (size_t i = 1; i < n; ++i) req.inner.push_back(i);
  req.filtration = FiltrationMode::induced;
  req.ideal_m = m_original;

  FiliformResult res{build_from_algebra(req), static_cast<unsigned>(n),
                     static_cast<unsigned>(n - m_original)};
  if (!res.outcome.f_expected || Int(res.outcome.qm.dim()) != *res.outcome.f_expected)
    throw Error("Internal", "filiform quotient dimension disagrees with f(n, beta)");
  return res;
}

} // namespace builder
} // namespace nilrep
