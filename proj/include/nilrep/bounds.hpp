#ifndef NILREP_BOUNDS_HPP
#define NILREP_BOUNDS_HPP

#include "nilrep/lie.hpp"
#include "nilrep/rational.hpp"

#include <string>
#include <vector>

namespace nilrep {
namespace bounds {

/// Number of partitions of j into parts of size at most k (p_k(0) = 1,
/// p_0(j) = 0 for j > 0).
Int p_restricted(unsigned k, unsigned j);

/// Faithful-module dimension f(n, beta) = beta + sum_{j=0}^{n-2}
/// p_{n-1-beta}(j). Requires n >= 3 and 1 <= beta <= n-1.
Int f(unsigned n, unsigned beta);

/// Closed forms for the three largest beta values.
Int f_closed_beta_nm1(unsigned n); // n
Int f_closed_beta_nm2(unsigned n); // 2n - 3
Int f_closed_beta_nm3(unsigned n); // (n^2 + 3n - 12 + 2*floor(n/2)) / 4, n >= 4

struct LowerBound {
  std::string name; // "sqrt-dim", "class-plus-one", "filiform-dim"
  Int value;
};

struct MuLowerResult {
  Int value; // max over sources
  std::vector<LowerBound> sources;
};

/// Lower bounds on the minimal faithful module dimension applicable to L.
MuLowerResult mu_lower(const LieAlgebra& L);

/// Upper estimate beta + (2n-beta-3)^(n-beta-1) / (n-beta-1)! dominating
/// f(n, beta); exact rational.
Rat remark_bound(unsigned n, unsigned beta);

/// Bound with beta = floor(n/2): n - 1 + sum_{j=0}^{n-2} p_{floor(n/2)-1}(j).
Int half_beta_bound(unsigned n);

/// dim_q + (3/sqrt(r)) 2^r carried exactly: rational part plus
/// sqrt_coeff * sqrt(radicand), with the ceiling computed by squaring.
/// Perfect-square radicands fold into the rational part.
struct GeneralBoundValue {
  Rat rational_part;
  Rat sqrt_coeff;
  unsigned radicand;
  Int ceiling;
};

GeneralBoundValue general_bound_value(const Int& dim_q, unsigned r);

} // namespace bounds
} // namespace nilrep

#endif
