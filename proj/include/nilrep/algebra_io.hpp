#ifndef NILREP_ALGEBRA_IO_HPP
#define NILREP_ALGEBRA_IO_HPP

#include "nilrep/lie.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilrep {
namespace io {

/// On-disk description of a Lie algebra: dimension, optional basis
/// labels, sparse bracket table. 1-based indices, i < j, missing pairs
/// bracket to zero, coefficients are rational strings ("p", "-p/q").
struct AlgebraFile {
  size_t dim = 0;
  std::vector<std::string> basis; // always dim labels after parsing
  LieAlgebra algebra;
};

/// Parses the object form {"dim": n, "basis": [...], "brackets": [...]}.
/// Bracket entries are [i, j, [[k, "c"], ...]] or the equivalent
/// {"i":, "j":, "terms":} object. Throws Error("ParseError") pointing at
/// the offending field; Jacobi is not checked here.
AlgebraFile parse_algebra(const nlohmann::json& j);
AlgebraFile load_algebra(const std::string& path);

/// Canonical echo: brackets sorted by (i, j), entries in array form.
nlohmann::json algebra_to_json(const AlgebraFile& af);

/// A module document pairs an algebra with one action matrix per basis
/// element. Matrices are dense row-major rational strings, one row per
/// JSON array. Build reports embed this document under the same keys.
struct ModuleDoc {
  AlgebraFile af;
  std::vector<std::string> basis_names;
  Representation rep;
};

nlohmann::json module_to_json(const AlgebraFile& af, const std::vector<std::string>& basis_names,
                              const Representation& rep);

/// Reads {"algebra": ..., "module": ...} from any JSON object carrying
/// those two keys (a bare module file or a full build report).
ModuleDoc parse_module(const nlohmann::json& j);
ModuleDoc load_module(const std::string& path);

nlohmann::json mat_to_json(const QMat& m);
QMat mat_from_json(const nlohmann::json& j, const std::string& where);

/// Canonical report bytes: two-space indent, keys sorted, trailing
/// newline. Identical inputs must produce identical bytes.
std::string dump_report(const nlohmann::json& j);

} // namespace io
} // namespace nilrep

#endif
