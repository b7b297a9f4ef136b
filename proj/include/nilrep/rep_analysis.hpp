#pragma once

#include "nilrep/lie.hpp"
#include "nilrep/linalg.hpp"

#include <string>
#include <vector>

namespace nilrep {
namespace rep_analysis {

/// rho = delta + nu in a common generalized-eigenspace basis: delta scalar
/// per block (the weights), nu strictly upper triangular.
struct WeightSplit {
  QMat change_of_basis;       // rows are the new basis vectors
  std::vector<QMat> delta;    // diagonal parts, one per algebra basis element
  std::vector<QMat> nu;       // strictly upper parts
  std::vector<QVec> weights;  // one functional per block, values on x_1..x_n
  std::vector<size_t> block_dims;
};

/// Pre: rep.algebra nilpotent; all eigenvalues rational. Errors:
/// NotNilpotent, IrrationalWeights.
WeightSplit weight_decompose(const Representation& rep);

struct TransferResult {
  bool hypothesis_ok; // Z(L) inside [L,L]
  bool rho_faithful;
  bool nu_faithful;
  std::string status; // "ok" or "HypothesisFails"
};

/// Checks rho faithful iff nu faithful, valid whenever Z(L) is contained in
/// [L,L]. A failed hypothesis is reported, not thrown.
TransferResult faithful_transfer(const Representation& rep);

/// Characteristic polynomial, low-degree coefficients first, monic.
std::vector<Rat> char_poly(const QMat& a);

/// Rational roots with multiplicities, ascending; second member is the
/// total multiplicity found.
std::pair<std::vector<std::pair<Rat, size_t>>, size_t> rational_roots(std::vector<Rat> poly);

} // namespace rep_analysis
} // namespace nilrep
