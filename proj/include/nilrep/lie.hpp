#ifndef NILREP_LIE_HPP
#define NILREP_LIE_HPP

#include "nilrep/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilrep {

/// Finite-dimensional Lie algebra over Rat given by structure constants.
/// Brackets are stored for basis pairs i < j only (0-based); antisymmetry
/// and [x,x] = 0 are implied. Unset pairs bracket to zero.
class LieAlgebra {
public:
  LieAlgebra() : m_dim(0) {}
  explicit LieAlgebra(size_t dim) : m_dim(dim) {}

  size_t dim() const { return m_dim; }

  /// Sets [x_i, x_j] = v for i < j; v has length dim.
  void set_bracket(size_t i, size_t j, QVec v);

  /// [x_i, x_j] for any i, j (sign handled).
  QVec bracket_basis(size_t i, size_t j) const;

  /// Bilinear extension to arbitrary coordinate vectors.
  QVec bracket(const QVec& a, const QVec& b) const;

  /// ad(x_i) as a dim x dim matrix (columns are [x_i, x_j]).
  QMat ad_basis(size_t i) const;
  /// ad(v) for an arbitrary vector.
  QMat ad(const QVec& v) const;

  const std::map<std::pair<size_t, size_t>, QVec>& table() const { return m_table; }

private:
  size_t m_dim;
  std::map<std::pair<size_t, size_t>, QVec> m_table;
};

/// Checks the Jacobi identity on all basis triples; throws
/// Error("JacobiViolation") naming the first violating triple (1-based).
void validate(const LieAlgebra& L);

/// Descending series L^1 = L, L^{k+1} = [L, L^k], listed down to the last
/// nonzero term. Throws Error("NotNilpotent") if it stabilizes above zero.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

/// Nilpotency class: length of the lower central series (0 for dim 0).
size_t nilpotency_class(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
Subspace derived(const LieAlgebra& L);

/// True when dim >= 3 and class == dim - 1.
bool is_filiform(const LieAlgebra& L);

/// Result of splitting off the largest central factor missing the derived
/// subalgebra: L = Q^abelian_dim + complement (Lie algebra direct sum).
struct SplitResult {
  size_t abelian_dim;
  LieAlgebra complement;      // structure constants in the complement basis
  QMat complement_basis;      // rows: complement basis vectors in L coordinates
  QMat abelian_basis;         // rows: central basis vectors in L coordinates
};

/// Splits L so that the complement M satisfies Z(M) contained in [M,M].
SplitResult split_abelian_factor(const LieAlgebra& L);

/// Leibniz check D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& L, const QMat& D);

/// Module given by one matrix per basis element of the algebra.
struct Representation {
  LieAlgebra algebra;
  std::vector<QMat> mats;
  size_t degree() const { return mats.empty() ? 0 : mats[0].rows(); }
  /// rho(v) for arbitrary v by linearity.
  QMat apply(const QVec& v) const;
};

struct VerifyResult {
  bool is_module;                                  // rho([x,y]) == [rho x, rho y] everywhere
  std::optional<std::pair<size_t, size_t>> first_violation; // 0-based pair if not
  Subspace kernel;                                 // { v : rho(v) = 0 }
  bool faithful;                                   // kernel == 0
};

VerifyResult verify_representation(const LieAlgebra& L, const Representation& rho);

/// Set of derivations of an algebra whose span is closed under commutator.
struct DerivationSet {
  LieAlgebra algebra;
  std::vector<QMat> mats;
};

/// Validates Leibniz and commutator closure; throws Error("NotDerivation")
/// or Error("NotClosed").
void validate_derivation_set(const DerivationSet& ds);

/// Adjoint representation of the extension <D> x| L restricted to L,
/// acting on Q^(dim L + 1). Requires D a derivation inducing an
/// isomorphism on the center (errors: NotDerivation, CenterDegenerate).
Representation extend_by_derivation(const LieAlgebra& L, const QMat& D);

/// Decomposition data for L = (outer subalgebra) x| (inner ideal), both
/// spanned by subsets of the algebra basis.
struct SemidirectData {
  LieAlgebra inner;                  // structure constants on the inner indices
  std::vector<size_t> inner_indices; // 0-based positions in L, ascending
  LieAlgebra outer;                  // structure constants on the outer indices
  std::vector<size_t> outer_indices;
  DerivationSet action;              // outer basis acting on the inner algebra
};

/// Splits L along a basis-indexed ideal. Errors: NotAnIdeal,
/// NotASubalgebra, NotInjective (some complement vector acts as zero).
SemidirectData semidirect_decompose(const LieAlgebra& L, const std::vector<size_t>& inner_indices);

/// Faithful affine representation of b x| a for an abelian algebra a and
/// derivations b acting faithfully: degree dim(a) + 1. Also returns the
/// constructed algebra (basis: b's then a's).
struct AffineEmbedResult {
  LieAlgebra algebra; // b x| a
  Representation rep;
};

AffineEmbedResult affine_embed(const DerivationSet& b_on_a);

/// Structure constants of L rewritten in the basis given by the rows of p
/// (rows = new basis vectors in old coordinates; p square invertible).
LieAlgebra change_basis(const LieAlgebra& L, const QMat& p);

} // namespace nilrep

#endif
