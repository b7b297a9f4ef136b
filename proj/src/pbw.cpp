#include "nilrep/pbw.hpp"

#include "nilrep/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nilrep {
namespace pbw {

QVec PBWContext::to_positions(const QVec& inner_vec) const {
  QVec out(n(), Rat(0));
  for (size_t i = 0; i < n(); ++i) out[pos_of[i]] = inner_vec[i];
  return out;
}

Monomial PBWContext::make_monomial(std::vector<uint32_t> exp) const {
  Monomial m;
  m.exp = std::move(exp);
  for (size_t p = 0; p < m.exp.size(); ++p) {
    m.order += m.exp[p] * order[p];
    m.length += m.exp[p];
  }
  return m;
}

Monomial PBWContext::single(size_t pos) const {
  std::vector<uint32_t> e(n(), 0);
  e[pos] = 1;
  return make_monomial(std::move(e));
}

std::string PBWContext::monomial_name(const Monomial& m) const {
  std::string out;
  for (size_t p = 0; p < m.exp.size(); ++p) {
    if (m.exp[p] == 0) continue;
    if (!out.empty()) out += "*";
    out += label[p];
    if (m.exp[p] > 1) out += "^" + std::to_string(m.exp[p]);
  }
  return out.empty() ? "1" : out;
}

void validate_filtration(const LieAlgebra& inner, const std::vector<Subspace>& filtration) {
  const size_t n = inner.dim();
  if (filtration.empty()) throw Error("NotAdapted", "empty filtration");
  const size_t C = filtration.size();
  if (filtration[0] != Subspace::full(n))
    throw Error("NotAdapted", "first term must be the whole algebra");
  for (size_t t = 0; t < C; ++t) {
    if (filtration[t].ambient() != n) throw Error("NotAdapted", "term ambient mismatch");
    if (filtration[t].dim() == 0) throw Error("NotAdapted", "terms must be nonzero (zero term is implied)");
    if (t + 1 < C) {
      if (!filtration[t].contains(filtration[t + 1]) ||
          filtration[t + 1].dim() >= filtration[t].dim())
        throw Error("NotAdapted", "terms must strictly descend");
    }
  }
  // [n^[i], n^[j]] inside n^[i+j] (zero when i + j > C).
  for (size_t i = 1; i <= C; ++i)
    for (size_t j = i; j <= C; ++j) {
      const Subspace& a = filtration[i - 1];
      const Subspace& b = filtration[j - 1];
      for (size_t r = 0; r < a.dim(); ++r)
        for (size_t s = 0; s < b.dim(); ++s) {
          QVec w = inner.bracket(a.basis_row(r), b.basis_row(s));
          if (i + j > C) {
            if (!is_zero(w))
              throw Error("NotAdapted", "bracket of levels " + std::to_string(i) + "," +
                                            std::to_string(j) + " must vanish");
          } else if (!filtration[i + j - 1].contains(w)) {
            throw Error("NotAdapted", "bracket of levels " + std::to_string(i) + "," +
                                          std::to_string(j) + " escapes level " + std::to_string(i + j));
          }
        }
    }
}

PBWContext make_context(const LieAlgebra& inner, const std::vector<Subspace>& filtration,
                        const std::vector<QMat>& derivs, uint32_t T,
                        const std::vector<size_t>& ideal_hint,
                        const std::vector<std::string>& labels) {
  const size_t n = inner.dim();
  if (T < 1) throw Error("BadTruncation", "truncation threshold must be at least 1");
  validate_filtration(inner, filtration);
  const uint32_t C = static_cast<uint32_t>(filtration.size());

  // Order of each basis vector: deepest term containing it.
  std::vector<uint32_t> ord(n, 0);
  for (size_t i = 0; i < n; ++i) {
    QVec e = unit_vec(n, i);
    for (uint32_t t = 1; t <= C; ++t)
      if (filtration[t - 1].contains(e)) ord[i] = t;
    if (ord[i] == 0) throw Error("Internal", "basis vector missing from the full term");
  }
  // Suffix alignment is a pure permutation: every term must be spanned by
  // basis vectors, which the dimension count detects.
  for (uint32_t t = 1; t <= C; ++t) {
    size_t cnt = 0;
    for (size_t i = 0; i < n; ++i)
      if (ord[i] >= t) ++cnt;
    if (cnt != filtration[t - 1].dim())
      throw Error("BasisAlignmentImpossible",
                  "filtration term " + std::to_string(t) + " is not spanned by basis vectors");
  }

  std::vector<bool> hinted(n, false);
  for (size_t i : ideal_hint) {
    if (i >= n) throw Error("BadIndex", "ideal hint index out of range");
    hinted[i] = true;
  }

  PBWContext ctx;
  ctx.inner = inner;
  ctx.C = C;
  ctx.T = T;
  ctx.perm.resize(n);
  std::iota(ctx.perm.begin(), ctx.perm.end(), size_t(0));
  std::stable_sort(ctx.perm.begin(), ctx.perm.end(), [&](size_t a, size_t b) {
    if (ord[a] != ord[b]) return ord[a] < ord[b];
    return !hinted[a] && hinted[b];
  });
  ctx.pos_of.resize(n);
  ctx.order.resize(n);
  ctx.label.resize(n);
  for (size_t p = 0; p < n; ++p) {
    ctx.pos_of[ctx.perm[p]] = p;
    ctx.order[p] = ord[ctx.perm[p]];
    ctx.label[p] = labels.empty() ? "X" + std::to_string(ctx.perm[p] + 1) : labels[ctx.perm[p]];
  }

  // Brackets in position coordinates.
  ctx.m_btab.assign(n * n, {});
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p + 1; q < n; ++q) {
      QVec w = inner.bracket_basis(ctx.perm[p], ctx.perm[q]);
      std::vector<std::pair<size_t, Rat>> sparse;
      for (size_t k = 0; k < n; ++k)
        if (w[k] != 0) sparse.emplace_back(ctx.pos_of[k], w[k]);
      std::sort(sparse.begin(), sparse.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ctx.m_btab[p * n + q] = std::move(sparse);
    }

  // Derivations: validate, permute, classify.
  ctx.order_preserving = true;
  ctx.order_raising = true;
  for (const QMat& D : derivs) {
    if (!is_derivation(inner, D))
      throw Error("NotDerivation", "context derivation fails the Leibniz rule");
    QMat dp(n, n);
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) dp.at(p, q) = D.at(ctx.perm[p], ctx.perm[q]);
    for (size_t q = 0; q < n; ++q) {
      uint32_t o_img = kInfOrder;
      for (size_t p = 0; p < n; ++p)
        if (dp.at(p, q) != 0) o_img = std::min(o_img, ctx.order[p]);
      if (o_img < ctx.order[q]) ctx.order_preserving = false;
      if (o_img != kInfOrder && o_img < ctx.order[q] + 1) ctx.order_raising = false;
    }
    ctx.derivs.push_back(std::move(dp));
  }
  if (!ctx.order_preserving) ctx.order_raising = false;
  return ctx;
}

uint32_t elt_order(const Elt& e) {
  // Maps are sorted by (order, exp); the first key carries the minimum.
  return e.empty() ? kInfOrder : e.begin()->first.order;
}

uint32_t elt_length(const Elt& e) {
  uint32_t best = kInfOrder;
  for (const auto& [m, c] : e) {
    (void)c;
    best = std::min(best, m.length);
  }
  return best;
}

void add_term(Elt& e, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

void add_scaled(Elt& acc, const Elt& e, const Rat& c) {
  if (c == 0) return;
  for (const auto& [m, x] : e) add_term(acc, m, c * x);
}

namespace {

uint32_t word_order(const PBWContext& ctx, const std::vector<uint32_t>& word) {
  uint32_t o = 0;
  for (uint32_t p : word) o += ctx.order[p];
  return o;
}

Monomial monomial_from_sorted_word(const PBWContext& ctx, const std::vector<uint32_t>& word) {
  std::vector<uint32_t> exp(ctx.n(), 0);
  for (uint32_t p : word) ++exp[p];
  return ctx.make_monomial(std::move(exp));
}

std::vector<uint32_t> word_from_monomial(const Monomial& m) {
  std::vector<uint32_t> word;
  word.reserve(m.length);
  for (uint32_t p = 0; p < m.exp.size(); ++p)
    for (uint32_t k = 0; k < m.exp[p]; ++k) word.push_back(p);
  return word;
}

} // namespace

Elt straighten(const PBWContext& ctx, const std::vector<uint32_t>& word, const Rat& coeff) {
  Elt out;
  if (coeff == 0) return out;
  // Worklist rewriting. Each step either swaps the first descent (one
  // fewer inversion) or shortens the word, so it terminates.
  std::vector<std::pair<std::vector<uint32_t>, Rat>> work;
  work.emplace_back(word, coeff);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (word_order(ctx, w) > ctx.T) continue;
    size_t r = 0;
    bool sorted = true;
    for (; r + 1 < w.size(); ++r)
      if (w[r] > w[r + 1]) {
        sorted = false;
        break;
      }
    if (sorted) {
      add_term(out, monomial_from_sorted_word(ctx, w), c);
      continue;
    }
    const size_t p = w[r + 1], q = w[r]; // q > p
    std::vector<uint32_t> swapped = w;
    std::swap(swapped[r], swapped[r + 1]);
    work.emplace_back(std::move(swapped), c);
    // X_q X_p = X_p X_q - [X_p, X_q]
    for (const auto& [k, ck] : ctx.bracket_pos(p, q)) {
      std::vector<uint32_t> shorter;
      shorter.reserve(w.size() - 1);
      for (size_t t = 0; t < w.size(); ++t) {
        if (t == r) shorter.push_back(static_cast<uint32_t>(k));
        if (t != r && t != r + 1) shorter.push_back(w[t]);
      }
      work.emplace_back(std::move(shorter), -c * ck);
    }
  }
  return out;
}

Elt left_mul(const PBWContext& ctx, const QVec& v_pos, const Elt& e) {
  Elt out;
  for (size_t p = 0; p < v_pos.size(); ++p) {
    if (v_pos[p] == 0) continue;
    for (const auto& [m, c] : e) {
      std::vector<uint32_t> word;
      word.reserve(m.length + 1);
      word.push_back(static_cast<uint32_t>(p));
      for (uint32_t x : word_from_monomial(m)) word.push_back(x);
      add_scaled(out, straighten(ctx, word, c), v_pos[p]);
    }
  }
  return out;
}

Elt derive(const PBWContext& ctx, const QMat& d_pos, const Elt& e) {
  Elt out;
  for (const auto& [m, c] : e) {
    std::vector<uint32_t> word = word_from_monomial(m);
    for (size_t slot = 0; slot < word.size(); ++slot) {
      QVec img = d_pos.col(word[slot]);
      for (size_t k = 0; k < img.size(); ++k) {
        if (img[k] == 0) continue;
        std::vector<uint32_t> replaced = word;
        replaced[slot] = static_cast<uint32_t>(k);
        add_scaled(out, straighten(ctx, replaced, c), img[k]);
      }
    }
  }
  return out;
}

Elt multiply(const PBWContext& ctx, const Elt& a, const Elt& b) {
  Elt out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<uint32_t> word = word_from_monomial(ma);
      for (uint32_t x : word_from_monomial(mb)) word.push_back(x);
      add_scaled(out, straighten(ctx, word, Rat(1)), ca * cb);
    }
  return out;
}

namespace {

void enumerate_rec(const PBWContext& ctx, size_t pos, uint32_t budget, std::vector<uint32_t>& exp,
                   const std::function<bool(const Monomial&)>& pred, std::vector<Monomial>& out) {
  if (pos == ctx.n()) {
    Monomial m = ctx.make_monomial(exp);
    if (!pred || pred(m)) out.push_back(std::move(m));
    return;
  }
  const uint32_t step = ctx.order[pos];
  for (uint32_t k = 0;; ++k) {
    uint32_t cost = k * step;
    if (cost > budget) break;
    exp[pos] = k;
    enumerate_rec(ctx, pos + 1, budget - cost, exp, pred, out);
  }
  exp[pos] = 0;
}

} // namespace

std::vector<Monomial> enumerate_monomials(const PBWContext& ctx, uint32_t max_order,
                                          const std::function<bool(const Monomial&)>& pred) {
  std::vector<Monomial> out;
  std::vector<uint32_t> exp(ctx.n(), 0);
  enumerate_rec(ctx, 0, max_order, exp, pred, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialLess()(a, b);
  });
  return out;
}

} // namespace pbw
} // namespace nilrep
