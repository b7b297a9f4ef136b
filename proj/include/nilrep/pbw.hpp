#ifndef NILREP_PBW_HPP
#define NILREP_PBW_HPP

#include "nilrep/lie.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nilrep {
namespace pbw {

/// Order value of the zero element (and of vanishing derivation images).
constexpr uint32_t kInfOrder = UINT32_MAX;

/// Standard monomial X_1^{a_1} ... X_n^{a_n} in context position
/// coordinates, with its filtration order and length cached.
struct Monomial {
  std::vector<uint32_t> exp;
  uint32_t order = 0;  // sum of position orders weighted by exponents
  uint32_t length = 0; // sum of exponents

  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Canonical monomial order: by filtration order, then length, then by the
/// letter word read left to right (equivalently, reverse-lex on exponents),
/// so X1 sorts before X2 and X3 before X1^2 in the example contexts.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.order != b.order) return a.order < b.order;
    if (a.length != b.length) return a.length < b.length;
    return b.exp < a.exp;
  }
};

/// Element of the truncated enveloping algebra: monomial -> coefficient,
/// zero coefficients never stored, all monomials of order <= T.
using Elt = std::map<Monomial, Rat, MonomialLess>;

/// Truncated PBW rewriting context over an inner nilpotent algebra with an
/// adapted filtration and a derivation set. Basis positions are sorted by
/// ascending filtration order (stable), with ideal-hint vectors placed
/// after the others inside an equal-order block so a compatible ideal
/// becomes a suffix.
class PBWContext {
public:
  LieAlgebra inner{0};
  std::vector<size_t> perm;       // position -> inner basis index
  std::vector<size_t> pos_of;     // inner basis index -> position
  std::vector<uint32_t> order;    // per position, >= 1
  std::vector<std::string> label; // per position, e.g. "X3"
  uint32_t C = 0;                 // filtration length
  uint32_t T = 0;                 // truncation threshold
  std::vector<QMat> derivs;       // in position coordinates
  bool order_preserving = false;  // every derivation preserves order
  bool order_raising = false;     // every derivation raises order strictly

  size_t n() const { return perm.size(); }

  /// Sparse bracket [e_p, e_q] for positions p < q.
  const std::vector<std::pair<size_t, Rat>>& bracket_pos(size_t p, size_t q) const {
    return m_btab[p * n() + q];
  }

  /// Converts an inner-coordinate vector to position coordinates.
  QVec to_positions(const QVec& inner_vec) const;

  Monomial make_monomial(std::vector<uint32_t> exp) const;
  Monomial one() const { return make_monomial(std::vector<uint32_t>(n(), 0)); }
  Monomial single(size_t pos) const;

  std::string monomial_name(const Monomial& m) const;

  friend PBWContext make_context(const LieAlgebra&, const std::vector<Subspace>&,
                                 const std::vector<QMat>&, uint32_t,
                                 const std::vector<size_t>&, const std::vector<std::string>&);

private:
  std::vector<std::vector<std::pair<size_t, Rat>>> m_btab;
};

/// Validates adaptedness of a filtration (terms n^[1] .. n^[C] in inner
/// coordinates, strictly descending, first term full, zero implied after):
/// [n^[i], n^[j]] inside n^[i+j]. Throws Error("NotAdapted").
void validate_filtration(const LieAlgebra& inner, const std::vector<Subspace>& filtration);

/// Builds a rewriting context. ideal_hint lists inner basis indices meant
/// to span a compatible ideal; they are sorted to the suffix within their
/// order block. labels (per inner index) default to "X1".."Xn". Errors:
/// NotAdapted, BasisAlignmentImpossible, NotDerivation.
PBWContext make_context(const LieAlgebra& inner, const std::vector<Subspace>& filtration,
                        const std::vector<QMat>& derivs, uint32_t T,
                        const std::vector<size_t>& ideal_hint = {},
                        const std::vector<std::string>& labels = {});

/// Filtration order of an element: min over its monomials (kInfOrder for 0).
uint32_t elt_order(const Elt& e);
/// Length lambda: min monomial length over the support (kInfOrder for 0).
uint32_t elt_length(const Elt& e);

void add_term(Elt& e, const Monomial& m, const Rat& c);
void add_scaled(Elt& acc, const Elt& e, const Rat& c);

/// Straightens an arbitrary word of basis positions into standard
/// monomials, discarding everything of order > T.
Elt straighten(const PBWContext& ctx, const std::vector<uint32_t>& word, const Rat& coeff = Rat(1));

/// Left multiplication by an inner-algebra vector in position coordinates.
Elt left_mul(const PBWContext& ctx, const QVec& v_pos, const Elt& e);

/// Action of a derivation (position coordinates) extended by Leibniz,
/// with D(1) = 0.
Elt derive(const PBWContext& ctx, const QMat& d_pos, const Elt& e);

/// Product of two elements (words concatenated and straightened).
Elt multiply(const PBWContext& ctx, const Elt& a, const Elt& b);

/// All monomials of order <= max_order satisfying pred, in canonical
/// order. A null pred keeps everything.
std::vector<Monomial> enumerate_monomials(const PBWContext& ctx, uint32_t max_order,
                                          const std::function<bool(const Monomial&)>& pred = nullptr);

} // namespace pbw
} // namespace nilrep

#endif
