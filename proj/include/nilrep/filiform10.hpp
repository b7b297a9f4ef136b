#pragma once

#include "nilrep/builder.hpp"
#include "nilrep/lie.hpp"
#include "nilrep/rational.hpp"
#include "nilrep/reducer.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace nilrep {
namespace filiform10 {

/// alpha[0] is a_1 through alpha[12] = a_13.
struct Params {
  std::array<Rat, 13> alpha;
};

/// The three defining equations, as residuals (all zero iff admissible).
std::array<Rat, 3> admissibility_residuals(const Params& p);

/// The 10-dimensional family member. Errors: NotAdmissible (message lists
/// the violated equations). Jacobi is re-verified independently.
LieAlgebra make_f10(const Params& p);

/// Reads the parameters back from a bracket table of the family's shape;
/// nullopt when the table does not match.
std::optional<Params> extract_params(const LieAlgebra& L);

/// One of 1, 2a1, 2a2a, 2a2b, 2b1, 2b2a, 2b2b1, 2b2b2.
std::string classify_case(const Params& p);

/// The general 58-dimensional module, with the basis permuted into the
/// family's published v_1..v_58 ordering. mats[i] is the action of x_{i+1}.
builder::QuotientModule build_V58(const Params& p);

struct RegressionRow {
  std::string generator; // "x1" or "x2"
  size_t v_index;        // 1-based column
  std::string status;    // match / match-up-to-documented-sign / mismatch
};
struct RegressionReport {
  size_t mismatches = 0;
  size_t sign_flips = 0;
  std::vector<RegressionRow> rows;
  bool all_match() const { return mismatches == 0; }
};

/// Compares every generated action entry of x1 and x2 on V58 against the
/// transcribed reference rows.
RegressionReport v58_regression(const Params& p);

struct MuBounds {
  Int lower;
  std::string lower_source;
  Int cited_upper;
  std::string upper_source;
  size_t achieved_dim;
  Int upper; // min(cited_upper, achieved_dim)
};
MuBounds mu_bounds(const Params& p, size_t achieved_dim);

struct PipelineResult {
  Params params;
  std::string case_label;
  reducer::ReductionChain chain;
  size_t final_dim;
  MuBounds mu;
};

/// V58, full reduction, bounds.
PipelineResult pipeline(const Params& p);

} // namespace filiform10
} // namespace nilrep
