#ifndef NILREP_BUILDER_HPP
#define NILREP_BUILDER_HPP

#include "nilrep/pbw.hpp"

#include <optional>

namespace nilrep {
namespace builder {

/// Compatible ideal J = span{positions m_pos .. n-1} of a context:
/// abelian, an ideal of the inner algebra, derivation-stable, and
/// squeezed between consecutive filtration terms at its level.
struct CompatibleIdeal {
  size_t m_pos;   // 0-based suffix start; m_pos == n means J = 0
  uint32_t level; // t with n^[t+1] inside J inside n^[t]
};

/// Errors: NotIdeal, NotAbelian, NotDInvariant, NotSqueezed.
CompatibleIdeal check_compatible(const pbw::PBWContext& ctx, size_t m_pos);

/// True for monomials killed in U(n)/Z_J: length >= 2 and (J-supported or
/// order >= C).
bool is_zj_monomial(const pbw::PBWContext& ctx, size_t m_pos, const pbw::Monomial& m);

/// One generator of an algebra mapping into d x| n: a derivation part
/// (position coordinates) plus an inner vector (position coordinates).
struct Generator {
  QMat deriv_pos;
  QVec inner_pos;
};

/// Faithful finite-dimensional quotient module of the truncated
/// enveloping algebra.
struct QuotientModule {
  pbw::PBWContext ctx;
  CompatibleIdeal ideal;
  std::vector<pbw::Monomial> basis; // canonical order
  std::vector<std::string> basis_names;
  std::vector<QMat> mats; // one per supplied generator
  std::string provenance; // which construction produced it
  size_t dim() const { return basis.size(); }
};

/// U(n)/Z_J via the monomial filter (Z_J is spanned by the monomials
/// is_zj_monomial accepts). Pre: derivations order-raising. Errors:
/// DerivationsNotOrderRaising, DimensionOverflow.
QuotientModule build_quotient(const pbw::PBWContext& ctx, const CompatibleIdeal& ideal,
                              const std::vector<Generator>& gens, size_t cap = 1000000);

/// Same quotient computed the slow way: Z_J assembled as an actual
/// subspace (two-sided products into J plus the high-order tail) and the
/// action reduced against it. Oracle for build_quotient on small inputs.
QuotientModule build_quotient_subspace_oracle(const pbw::PBWContext& ctx,
                                              const CompatibleIdeal& ideal,
                                              const std::vector<Generator>& gens);

/// U(n)/V_{C+1}: basis = all monomials of order <= C. Pre: derivations
/// order-preserving. Errors: DerivationsNotOrderPreserving,
/// DimensionOverflow.
QuotientModule build_order_truncation(const pbw::PBWContext& ctx,
                                      const std::vector<Generator>& gens, size_t cap = 1000000);

/// Picks the largest compatible suffix ideal among the natural candidates
/// (the center when it sits as a suffix, each filtration level's suffix,
/// and greedy abelian enlargements of those); ties prefer the smaller
/// level. Error: NoCompatibleIdealFound.
CompatibleIdeal auto_select_ideal(const pbw::PBWContext& ctx);

/// How the inner filtration of a build is chosen.
enum class FiltrationMode {
  induced, // n^[1] = n, n^[i] = L^i from the ambient algebra's series
  own_lcs, // the inner algebra's own lower central series
  custom,  // user-supplied coordinate terms
};

struct BuildRequest {
  LieAlgebra L{0};
  std::vector<size_t> inner;                      // 0-based basis indices of n
  FiltrationMode filtration = FiltrationMode::induced;
  std::vector<std::vector<size_t>> custom_terms;  // original-index terms, first = inner
  std::optional<size_t> ideal_m;                  // J = <x_m..x_n> (0-based original); none = auto
  std::optional<uint32_t> truncate;               // override T (default C)
};

struct BuildOutcome {
  SemidirectData sd;
  QuotientModule qm;
  Representation rep;   // action of the original algebra L
  VerifyResult verify;
  size_t beta;          // dim J
  std::optional<Int> f_expected; // f(dim L, beta) when the filiform count applies
};

/// Full pipeline: semidirect split, filtration, context, ideal, quotient,
/// faithfulness verification.
BuildOutcome build_from_algebra(const BuildRequest& req);

struct TwoStepResult {
  Representation rep;      // faithful, degree == dim L
  size_t abelian_dim;      // split-off central factor
  size_t complement_dim;
};

/// Faithful module of dimension exactly dim L for L nilpotent of class
/// <= 2 (error NotTwoStep otherwise).
TwoStepResult two_step_module(const LieAlgebra& L);

struct FiliformResult {
  BuildOutcome outcome;
  unsigned n;    // dim of the filiform algebra
  unsigned beta; // n - m + 1
};

/// Standard construction for a filiform algebra in an adapted basis with
/// J = <x_m, ..., x_n> (m is 0-based here; callers present it 1-based).
/// Errors: NotFiliform plus anything the generic path raises.
FiliformResult filiform_module(const LieAlgebra& f, size_t m_original);

} // namespace builder
} // namespace nilrep

#endif
