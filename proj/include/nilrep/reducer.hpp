#pragma once

#include "nilrep/lie.hpp"
#include "nilrep/linalg.hpp"

#include <optional>
#include <vector>

namespace nilrep {
namespace reducer {

/// Joint kernel of all action matrices. Pre: every matrix nilpotent
/// (checked). Errors: NotNilpotentModule.
Subspace invariant_space(const Representation& rep);

/// True when every rho(x_i) is nilpotent.
bool is_nilpotent_rep(const Representation& rep);

/// One quotient step: picks a submodule U inside the invariants greedily
/// (echelon basis scanned in pivot order, a vector joins U whenever the
/// center still acts faithfully on the enlarged quotient) and returns the
/// quotient module. Pre: faithful nilpotent module. Errors:
/// NoAdmissibleComplement when nothing can be removed.
struct ReduceResult {
  Representation rep;    // the quotient
  size_t invariant_dim;  // dim V^L before the step
  size_t complement_dim; // dim U
};
ReduceResult reduce_once(const Representation& rep);

struct ChainStep {
  Representation rep; // module at this stage, before reducing
  size_t invariant_dim;
  size_t complement_dim;
};
struct ReductionChain {
  size_t initial_dim = 0;
  std::vector<ChainStep> steps;
  Representation final_rep;
};

/// Iterates reduce_once until exhausted. Never throws for exhaustion; an
/// already-irreducible module yields an empty chain.
ReductionChain reduce_fully(const Representation& rep);

/// Debug-scale exhaustive search (dim <= 12): minimal faithful quotient
/// dimension over all chains whose complements are spanned by subsets of
/// the invariant echelon basis at each stage.
size_t minimal_final_dim_exhaustive(const Representation& rep);

} // namespace reducer
} // namespace nilrep
